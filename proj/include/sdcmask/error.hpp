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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdcmask {

// Every failure the library can report. The CLI maps each one to a distinct
// process exit code (see exit_code()).
enum class Errc {
  kUsage,
  kAlphaOutOfRange,
  kEmptyColumn,
  kLengthMismatch,
  kZeroVariance,
  kNonPositiveValue,
  kNegativeNoiseVariance,
  kDegenerateResidual,
  kEmptyRequest,
  kNonFiniteValue,
  kFileNotFound,
  kMalformedHeader,
  kParseError,
  kRaggedRows,
  kColumnNotFound,
  kIoError,
};

[[nodiscard]] std::string_view to_string(Errc code) noexcept;

// Process exit status for `code`. 0 and 1 are reserved for success and
// unexpected internal failures.
[[nodiscard]] int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

  // Offending element (NonPositiveValue, NonFiniteValue) or data row
  // (ParseError, RaggedRows), when one applies.
  [[nodiscard]] std::optional<std::size_t> index() const noexcept {
    return index_;
  }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace sdcmask
