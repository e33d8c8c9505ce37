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

#pragma once

#include <cstddef>
#include <string>

namespace carpenter {

inline constexpr int kDefaultMaxLevel = 11;
inline constexpr const char* kMaxLevelEnvVar = "CARPENTER_MAX_LEVEL";

// Dyadic level k of the tower M_{2^k}. Level k owns the partition of [0,1]
// into the cells [(i-1)/2^k, i/2^k), i = 1..2^k.
struct Level {
  int k = 0;

  constexpr std::size_t dim() const { return std::size_t{1} << k; }
  constexpr Level next() const { return Level{k + 1}; }
  friend constexpr bool operator==(Level, Level) = default;
};

bool is_power_of_two(std::size_t n);

// Level of a side length; throws std::invalid_argument unless n = 2^k.
Level level_of_dim(std::size_t n);

// Throws LevelOverflow when `level` exceeds `max_level`.
void require_level(int level, int max_level, const std::string& what);

// Default level cap, overridden by the CARPENTER_MAX_LEVEL environment
// variable. Throws std::invalid_argument on a malformed value.
int max_level_from_env();

struct ToleranceConfig {
  double eq_tol = 1e-10;
  double proj_tol = 1e-8;
  double ratio_slack = 1e-9;

  // Throws std::invalid_argument unless every tolerance is strictly positive.
  void validate() const;
};

}  // namespace carpenter
