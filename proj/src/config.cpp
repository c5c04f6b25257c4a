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

#include "sdcmask/config.hpp"

#include "sdcmask/error.hpp"

namespace sdcmask {

std::string_view to_string(Method method) noexcept {
  return method == Method::kAdditive ? "additive" : "multiplicative";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "additive") return Method::kAdditive;
  if (text == "multiplicative") return Method::kMultiplicative;
  return std::nullopt;
}

void validate(const MaskConfig& config) {
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
    throw Error(Errc::kAlphaOutOfRange,
                "alpha must lie in [0, 1], got " + std::to_string(config.alpha));
  }
  if (config.target_column.empty()) {
    throw Error(Errc::kUsage, "no target column given");
  }
  const bool additive = config.method == Method::kAdditive;
  if (additive && !config.key_column) {
    throw Error(Errc::kUsage, "the additive method requires a key column");
  }
  if (!additive && config.key_column) {
    throw Error(Errc::kUsage, "the multiplicative method takes no key column");
  }
  if (additive && *config.key_column == config.target_column) {
    throw Error(Errc::kUsage, "key column must differ from the target column");
  }
}

std::string report_path_for(const MaskConfig& config) {
  return config.report_path.empty() ? config.output_path + ".report.json"
                                    : config.report_path;
}

}  // namespace sdcmask
