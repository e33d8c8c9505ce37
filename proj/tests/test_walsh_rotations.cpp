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

#include "carpenter/exact_checks.hpp"
#include "carpenter/random.hpp"
#include "carpenter/walsh.hpp"
#include "oracle/dense_oracle.hpp"

namespace carpenter {
namespace {

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

TEST(W1, ExactlyUnitaryWithUnitDeterminant) {
  const auto w = w1<QuadExtComplex>();
  EXPECT_EQ(w * w.adjoint(), ExactMatrix::identity(4));
  EXPECT_EQ(w.adjoint() * w, ExactMatrix::identity(4));
  // The only non-trivial block is the 2x2 rotation (s -s; s s): det = 2 s^2 = 1.
  const QuadExt det = w(1, 1).re * w(2, 2).re - w(1, 2).re * w(2, 1).re;
  EXPECT_EQ(det, QuadExt(1));
}

TEST(W1, Entries) {
  const CMatrix w = w1();
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(w(0, 0), Complex(1.0));
  EXPECT_EQ(w(3, 3), Complex(1.0));
  EXPECT_NEAR(std::abs(w(1, 1) - s), 0.0, 2e-16);
  EXPECT_NEAR(std::abs(w(1, 2) + s), 0.0, 2e-16);
  EXPECT_NEAR(std::abs(w(2, 1) - s), 0.0, 2e-16);
  EXPECT_NEAR(std::abs(w(2, 2) - s), 0.0, 2e-16);
  EXPECT_EQ(w(0, 1), Complex(0.0));
}

TEST(W, BlockDiagonalStructure) {
  const CMatrix w2 = w(2);
  ASSERT_EQ(w2.dim(), 8u);
  const CMatrix b = w1();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Complex want = (i / 4 == j / 4) ? b(i % 4, j % 4) : Complex(0.0);
      EXPECT_EQ(w2(i, j), want);
    }
  EXPECT_LE(max_abs_diff(w2 * w2.adjoint(), CMatrix::identity(8)), 1e-15);
}

TEST(W, MatchesKroneckerOracle) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_LE(max_abs_diff(w(m), oracle::from_dense(oracle::w(m))), 2e-16);
  }
}

TEST(W, RejectsBadIndex) {
  EXPECT_THROW(w(0), std::invalid_argument);
  EXPECT_THROW(w(11), LevelOverflow);
}

TEST(ConjugateByW, MatchesDenseOracle) {
  Rng rng(17);
  for (int m = 1; m <= 7; ++m) {
    const CMatrix x = random_general(Level{m + 1}, rng);
    const oracle::Dense wm = oracle::w(m);
    const CMatrix want = oracle::from_dense(wm * oracle::to_dense(x) * wm.adjoint());
    EXPECT_LE(max_abs_diff(conjugate_by_w(x, m), want), 1e-12) << "m=" << m;
  }
}

TEST(ConjugateByW, ExactInverse) {
  Rng rng(2);
  ExactMatrix x(4);
  for (auto& z : x.data()) z = random_rational_2x2(rng).data()[0];
  const ExactMatrix y = conjugate_by_w(x, 1);
  const auto wm = w1<QuadExtComplex>();
  EXPECT_EQ(wm.adjoint() * y * wm, x);
  EXPECT_EQ(y, wm * x * wm.adjoint());
}

TEST(ConjugateByW, RejectsWrongLevel) {
  CMatrix x(8);
  EXPECT_THROW(conjugate_by_w_inplace(x, 1), std::invalid_argument);
  EXPECT_THROW(conjugate_by_w_inplace(x, 0), std::invalid_argument);
}

TEST(DiagAfterW, Examples) {
  EXPECT_EQ(diag_after_w<double>({1, 2, 3, 4, 5, 6, 7, 8}),
            (std::vector<double>{1, 2.5, 2.5, 4, 5, 6.5, 6.5, 8}));
  EXPECT_EQ(diag_after_w<double>({0, 0, 1, 1}), (std::vector<double>{0, 0.5, 0.5, 1}));
  EXPECT_THROW(diag_after_w<double>({0, 1}), std::invalid_argument);
}

TEST(DiagAfterW, AgreesWithConjugationOfDiagonal) {
  Rng rng(31);
  const CMatrix x = random_real_diagonal(Level{4}, rng);
  std::vector<double> d;
  for (const Complex& z : diag_compress(x)) d.push_back(z.real());
  const CMatrix y = conjugate_by_w(x, 3);
  const auto got = diag_after_w(d);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(y(i, i).real(), got[i], 1e-15);
}

TEST(ConjugateByW, DiagonalDependsOnlyOnOwnBlock) {
  // The diagonal of W X W* restricted to a 4-block only sees that block of X.
  Rng rng(13);
  CMatrix x = random_general(Level{3}, rng);
  const auto before = diag_compress(conjugate_by_w(x, 2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 4; j < 8; ++j) {
      x(i, j) += Complex(3.0, -1.0);
      x(j, i) += Complex(-2.0, 0.5);
    }
  const auto after = diag_compress(conjugate_by_w(x, 2));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(before[i] - after[i]), 0.0, 1e-14);
}

TEST(ConjugateByW, PreservesFrobeniusNorm) {
  Rng rng(5);
  const CMatrix x = random_general(Level{6}, rng);
  EXPECT_NEAR(frobenius_sq(conjugate_by_w(x, 5)) / frobenius_sq(x), 1.0, 1e-13);
}

}  // namespace
}  // namespace carpenter
