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

#include <cstdint>
#include <random>
#include <string>

#include "carpenter/level.hpp"
#include "carpenter/matrix.hpp"

namespace carpenter {

/// Seeded generator with platform-independent draws.
///
/// std::*_distribution output is implementation-defined, so the derived draws
/// are computed from raw mt19937_64 words to keep seeded runs byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform integer on [lo, hi], rejection sampled.
  long long uniform_int(long long lo, long long hi);

 private:
  std::mt19937_64 engine_;
};

// Entries with real and imaginary parts uniform in [-1, 1].
CMatrix random_general(Level level, Rng& rng);
// (G + G*)/2 for a random general G.
CMatrix random_selfadjoint(Level level, Rng& rng);
// Spectral projection of a random selfadjoint matrix onto eigenvalues > 0
// (rounding the spectrum at 1/2 after the affine map to [0,1]).
CMatrix random_projection(Level level, Rng& rng);
// Diagonal matrix with real entries uniform in [lo, hi].
CMatrix random_real_diagonal(Level level, Rng& rng, double lo = -1.0, double hi = 1.0);

/// Named seeds: "diag01" (diag(0,1,0,1,...), i.e. diag(0,1) at level 1),
/// "identity", "rand-sa", "rand-proj", "rand-general", "rand-diag".
/// Throws std::invalid_argument on an unknown name.
CMatrix named_seed(const std::string& name, Level level, Rng& rng);

}  // namespace carpenter
