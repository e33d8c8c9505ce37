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
#include <optional>
#include <string>
#include <vector>

#include "carpenter/matrix.hpp"
#include "carpenter/quad_ext.hpp"
#include "carpenter/random.hpp"

namespace carpenter {

using ExactMatrix = Matrix<QuadExtComplex>;

// The contraction constant 5/4 - (1/2) sqrt2.
QuadExt lambda_exact();
inline constexpr double kLambda = 0.5428932188134525;
inline constexpr const char* kLambdaText = "5/4 - sqrt(2)/2";

// Level-1 seed B and its first two iterates, all in Q(sqrt2)[i].
struct ExactIterates {
  ExactMatrix b1;  // B
  ExactMatrix b2;  // W_1 embed(B) W_1*
  ExactMatrix b3;  // W_2 embed(B(2)) W_2*
};
ExactIterates exact_iterates(const ExactMatrix& b);

struct ExactIdentity {
  QuadExt lhs;
  QuadExt rhs;
  bool holds() const { return lhs == rhs; }
};

/// fro^2(B(2) - embed B) against (4 - 2 sqrt2)(|b12|^2 + |b21|^2) + |b11 - b22|^2.
ExactIdentity eq5_sides(const ExactMatrix& b);
bool eq5_exact_check(const ExactMatrix& b);

/// (1/2) fro^2(B(3) - embed B(2)) against
/// (1/2)[(4 - 2 sqrt2)(|b12|^2 + |b21|^2) + (5/2 - sqrt2)|b11 - b22|^2].
ExactIdentity eq6_sides(const ExactMatrix& b);
bool eq6_exact_check(const ExactMatrix& b);

// (1/2) fro^2(B(3) - embed B(2)) / fro^2(B(2) - embed B); nullopt when the
// denominator vanishes.
std::optional<QuadExt> exact_step_ratio(const ExactMatrix& b);

// 2x2 matrix whose entries have real and imaginary parts p/q with
// p in [-9, 9], q in [1, 9].
ExactMatrix random_rational_2x2(Rng& rng);

struct ExactSample {
  ExactIdentity eq5;
  ExactIdentity eq6;
  std::optional<QuadExt> ratio;
  bool ratio_within_lambda = true;
};

struct ExactSuiteResult {
  std::vector<ExactSample> samples;
  int identities_verified = 0;
  bool lambda_below_one = false;
  bool pass = false;
};

// eq5 / eq6 / ratio <= lambda on `samples` seeded random matrices.
ExactSuiteResult run_exact_suite(int samples, std::uint64_t seed);

}  // namespace carpenter
