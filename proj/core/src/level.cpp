// Copyright 2026 The Carpenter Lab Authors
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

#include "carpenter/level.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "carpenter/errors.hpp"

namespace carpenter {

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

Level level_of_dim(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " is not a power of two");
  }
  return Level{std::countr_zero(n)};
}

void require_level(int level, int max_level, const std::string& what) {
  if (level > max_level) {
    throw LevelOverflow(what + ": level " + std::to_string(level) +
                        " exceeds max level " + std::to_string(max_level));
  }
}

int max_level_from_env() {
  const char* raw = std::getenv(kMaxLevelEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultMaxLevel;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 ||
      value > 16) {
    throw std::invalid_argument(std::string(kMaxLevelEnvVar) +
                                " must be an integer in [1, 16], got '" +
                                std::string(text) + "'");
  }
  return value;
}

void ToleranceConfig::validate() const {
  if (!(eq_tol > 0) || !(proj_tol > 0) || !(ratio_slack > 0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

}  // namespace carpenter
