// Copyright 2026 The sdcmask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcmask/error.hpp"

namespace sdcmask {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kUsage: return "Usage";
    case Errc::kAlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::kEmptyColumn: return "EmptyColumn";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kZeroVariance: return "ZeroVariance";
    case Errc::kNonPositiveValue: return "NonPositiveValue";
    case Errc::kNegativeNoiseVariance: return "NegativeNoiseVariance";
    case Errc::kDegenerateResidual: return "DegenerateResidual";
    case Errc::kEmptyRequest: return "EmptyRequest";
    case Errc::kNonFiniteValue: return "NonFiniteValue";
    case Errc::kFileNotFound: return "FileNotFound";
    case Errc::kMalformedHeader: return "MalformedHeader";
    case Errc::kParseError: return "ParseError";
    case Errc::kRaggedRows: return "RaggedRows";
    case Errc::kColumnNotFound: return "ColumnNotFound";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::kUsage: return 2;
    case Errc::kAlphaOutOfRange: return 3;
    case Errc::kEmptyColumn: return 4;
    case Errc::kLengthMismatch: return 5;
    case Errc::kZeroVariance: return 6;
    case Errc::kNonPositiveValue: return 7;
    case Errc::kNegativeNoiseVariance: return 8;
    case Errc::kDegenerateResidual: return 9;
    case Errc::kEmptyRequest: return 10;
    case Errc::kNonFiniteValue: return 11;
    case Errc::kFileNotFound: return 12;
    case Errc::kMalformedHeader: return 13;
    case Errc::kParseError: return 14;
    case Errc::kRaggedRows: return 15;
    case Errc::kColumnNotFound: return 16;
    case Errc::kIoError: return 17;
  }
  return 1;
}

}  // namespace sdcmask
