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

#include <gtest/gtest.h>

#include <cmath>

#include "carpenter/dyadic.hpp"
#include "carpenter/exact_checks.hpp"
#include "carpenter/random.hpp"
#include "carpenter/walsh.hpp"
#include "oracle/dense_oracle.hpp"

namespace carpenter {
namespace {

const double kTol = 1e-12;

CMatrix diag_matrix(std::initializer_list<double> values) {
  std::vector<Complex> v;
  for (double x : values) v.emplace_back(x, 0.0);
  return CMatrix::diagonal(std::span<const Complex>(v));
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

TEST(Embed, DiagonalProjectionSpreadsOverPairs) {
  EXPECT_EQ(embed(diag_matrix({0, 1})), diag_matrix({0, 0, 1, 1}));
}

TEST(Embed, MatrixUnitSplitsIntoTwoUnits) {
  const CMatrix e12 = matrix_unit(Level{1}, 1, 2);
  EXPECT_EQ(embed(e12), matrix_unit(Level{2}, 1, 3) + matrix_unit(Level{2}, 2, 4));
}

TEST(Embed, AgreesWithKroneckerOracle) {
  Rng rng(11);
  for (int k = 1; k <= 4; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    EXPECT_EQ(max_abs_diff(embed(a), oracle::from_dense(oracle::embed(oracle::to_dense(a)))), 0.0);
  }
}

TEST(Embed, FrobeniusDoubling) {
  Rng rng(3);
  for (int k = 0; k <= 5; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    const double lhs = frobenius_sq(embed(a));
    const double rhs = 2.0 * frobenius_sq(a);
    EXPECT_NEAR(lhs / rhs, 1.0, kTol);
  }
}

TEST(Embed, OverflowBeyondMaxLevel) {
  const CMatrix a = CMatrix::identity(8);
  EXPECT_THROW(embed(a, 3), LevelOverflow);
  EXPECT_NO_THROW(embed(a, 4));
}

TEST(Embed, RejectsNonDyadicDimension) {
  EXPECT_THROW(embed(CMatrix::identity(3)), std::invalid_argument);
}

TEST(Embed, IsUnitalStarHomomorphism) {
  Rng rng(5);
  for (int k = 1; k <= 4; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    const CMatrix b = random_general(Level{k}, rng);
    EXPECT_LE(max_abs_diff(embed(a * b), embed(a) * embed(b)), kTol);
    EXPECT_LE(max_abs_diff(embed(a.adjoint()), embed(a).adjoint()), kTol);
    EXPECT_EQ(embed(CMatrix::identity(a.dim())), CMatrix::identity(2 * a.dim()));
  }
}

TEST(Embed, ExactRealizationDoublesFrobeniusExactly) {
  Rng rng(2);
  const ExactMatrix b = random_rational_2x2(rng);
  EXPECT_EQ(frobenius_sq(embed(b)), QuadExt(2) * frobenius_sq(b));
}

TEST(DiagCompress, OffDiagonalUnitHasZeroDiagonal) {
  const auto d = diag_compress(matrix_unit(Level{1}, 1, 2));
  EXPECT_EQ(d, (std::vector<Complex>{0.0, 0.0}));
}

TEST(DiagCompress, Identity) {
  EXPECT_EQ(diag_compress(CMatrix::identity(4)), std::vector<Complex>(4, 1.0));
}

TEST(DiagCompress, CommutesWithEmbed) {
  Rng rng(8);
  for (int k = 1; k <= 4; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    EXPECT_EQ(embed_diagonal(diag_compress(a)), diag_compress(embed(a)));
    EXPECT_EQ(embed(diag_part(a)), diag_part(embed(a)));
  }
}

TEST(DiagCompress, ConditionalExpectationProperties) {
  Rng rng(21);
  const Level lv{3};
  const CMatrix a = random_general(lv, rng);
  const CMatrix d1 = diag_part(random_general(lv, rng));
  const CMatrix d2 = diag_part(random_general(lv, rng));
  // idempotent
  EXPECT_EQ(diag_part(diag_part(a)), diag_part(a));
  // trace preserving
  EXPECT_LE(std::abs(normalized_trace(diag_part(a)) - normalized_trace(a)), kTol);
  // bimodule property over the diagonal algebra
  EXPECT_LE(max_abs_diff(diag_part(d1 * a * d2), d1 * diag_part(a) * d2), kTol);
}

TEST(NormalizedTrace, Examples) {
  EXPECT_EQ(normalized_trace(CMatrix::identity(8)), Complex(1.0));
  EXPECT_EQ(normalized_trace(diag_matrix({0, 0, 1, 1})), Complex(0.5));
}

TEST(NormalizedTrace, InvariantUnderEmbed) {
  Rng rng(4);
  for (int k = 0; k <= 5; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    EXPECT_LE(std::abs(normalized_trace(embed(a)) - normalized_trace(a)), kTol);
  }
}

TEST(Norms, IdentityAndDiag01) {
  for (int k = 0; k <= 5; ++k) {
    const auto n = norms(CMatrix::identity(Level{k}.dim()));
    EXPECT_EQ(n.fro_sq, std::ldexp(1.0, k));
    EXPECT_EQ(n.factor_sq, 1.0);
  }
  const auto n = norms(diag_matrix({0, 1}));
  EXPECT_EQ(n.fro_sq, 1.0);
  EXPECT_EQ(n.factor_sq, 0.5);
}

TEST(Norms, FactorNormIsometryUnderEmbed) {
  Rng rng(6);
  for (int k = 0; k <= 6; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    EXPECT_NEAR(norms(embed(a)).factor_sq / norms(a).factor_sq, 1.0, kTol);
  }
}

TEST(Classify, DiagonalProjection) {
  const auto f = classify(diag_matrix({0, 1}));
  EXPECT_TRUE(f.selfadjoint);
  EXPECT_TRUE(f.positive);
  EXPECT_TRUE(f.projection);
}

TEST(Classify, OffDiagonalUnit) {
  const auto f = classify(matrix_unit(Level{1}, 1, 2));
  EXPECT_FALSE(f.selfadjoint);
  EXPECT_FALSE(f.positive);
  EXPECT_FALSE(f.projection);
}

TEST(Classify, FirstIterateOfE11IsProjection) {
  // B = e11: B(2) has diagonal (1, 1/2, 1/2, 0) and is again a projection.
  const CMatrix b2 = conjugate_by_w(embed(matrix_unit(Level{1}, 1, 1)), 1);
  const auto d = diag_compress(b2);
  EXPECT_NEAR(d[0].real(), 1.0, kTol);
  EXPECT_NEAR(d[1].real(), 0.5, kTol);
  EXPECT_NEAR(d[2].real(), 0.5, kTol);
  EXPECT_NEAR(d[3].real(), 0.0, kTol);
  EXPECT_TRUE(classify(b2).projection);
}

TEST(Classify, SelfadjointButIndefinite) {
  const auto f = classify(diag_matrix({-1, 1}));
  EXPECT_TRUE(f.selfadjoint);
  EXPECT_FALSE(f.positive);
  EXPECT_FALSE(f.projection);
}

TEST(Classify, RejectsNonPositiveTolerance) {
  ToleranceConfig cfg;
  cfg.proj_tol = 0.0;
  EXPECT_THROW(classify(CMatrix::identity(2), cfg), std::invalid_argument);
}

TEST(MatrixUnit, Examples) {
  const CMatrix e11 = matrix_unit(Level{1}, 1, 1);
  EXPECT_EQ(e11(0, 0), Complex(1.0));
  EXPECT_EQ(frobenius_sq(e11), 1.0);
  EXPECT_EQ(matrix_unit(Level{2}, 2, 3) * matrix_unit(Level{2}, 3, 4), matrix_unit(Level{2}, 2, 4));
  CMatrix sum(4);
  for (std::size_t i = 1; i <= 4; ++i) sum += matrix_unit(Level{2}, i, i);
  EXPECT_EQ(sum, CMatrix::identity(4));
}

TEST(MatrixUnit, MultiplicationRule) {
  const Level lv{2};
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j)
      for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; l <= 4; ++l) {
          const CMatrix prod = matrix_unit(lv, i, j) * matrix_unit(lv, k, l);
          const CMatrix want = j == k ? matrix_unit(lv, i, l) : CMatrix(4);
          EXPECT_EQ(prod, want);
        }
}

TEST(MatrixUnit, OutOfRange) {
  EXPECT_THROW(matrix_unit(Level{1}, 0, 1), std::out_of_range);
  EXPECT_THROW(matrix_unit(Level{1}, 1, 3), std::out_of_range);
}

TEST(XDiscrete, Examples) {
  EXPECT_EQ(x_discrete(Level{2}), (std::vector<double>{0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(x_discrete(Level{1}), (std::vector<double>{0.5, 1.0}));
  // tau(x_k) = (2^k + 1) / 2^{k+1}
  for (int k = 0; k <= 8; ++k) {
    const auto x = x_discrete(Level{k});
    double s = 0.0;
    for (double v : x) s += v;
    EXPECT_DOUBLE_EQ(s / static_cast<double>(x.size()), (std::ldexp(1.0, k) + 1) / std::ldexp(1.0, k + 1));
  }
  const auto x3 = x_discrete(Level{3});
  double s = 0.0;
  for (double v : x3) s += v;
  EXPECT_EQ(s / 8.0, 9.0 / 16.0);
}

TEST(LevelHelpers, LevelOfDim) {
  EXPECT_EQ(level_of_dim(1).k, 0);
  EXPECT_EQ(level_of_dim(2048).k, 11);
  EXPECT_THROW(level_of_dim(0), std::invalid_argument);
  EXPECT_THROW(level_of_dim(6), std::invalid_argument);
}

TEST(LevelHelpers, MaxLevelFromEnvironment) {
  ::unsetenv(kMaxLevelEnvVar);
  EXPECT_EQ(max_level_from_env(), kDefaultMaxLevel);
  ::setenv(kMaxLevelEnvVar, "9", 1);
  EXPECT_EQ(max_level_from_env(), 9);
  ::setenv(kMaxLevelEnvVar, "nine", 1);
  EXPECT_THROW(max_level_from_env(), std::invalid_argument);
  ::unsetenv(kMaxLevelEnvVar);
}

}  // namespace
}  // namespace carpenter
