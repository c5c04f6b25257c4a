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

#include <optional>
#include <string>
#include <string_view>

#include "sdcmask/rng.hpp"

namespace sdcmask {

enum class Method { kAdditive, kMultiplicative };

[[nodiscard]] std::string_view to_string(Method method) noexcept;
[[nodiscard]] std::optional<Method> parse_method(std::string_view text);

struct MaskConfig {
  Method method = Method::kMultiplicative;
  double alpha = 1.0;  // similarity: 1 releases the data, 0 pure noise
  NoiseMode mode = NoiseMode::kExact;
  Seed seed;
  std::string target_column;
  std::optional<std::string> key_column;  // additive only
  std::string input_path;
  std::string output_path;
  // Empty means output_path + ".report.json".
  std::string report_path;
};

/// Checks the config invariants that need no data: alpha in [0, 1], a
/// target column, and a key column iff the method is additive. Throws
/// AlphaOutOfRange or Usage.
void validate(const MaskConfig& config);

[[nodiscard]] std::string report_path_for(const MaskConfig& config);

}  // namespace sdcmask
