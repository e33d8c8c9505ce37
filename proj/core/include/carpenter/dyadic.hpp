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

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "carpenter/errors.hpp"
#include "carpenter/level.hpp"
#include "carpenter/matrix.hpp"

namespace carpenter {

template <class T>
Level level_of(const Matrix<T>& a) {
  return level_of_dim(a.dim());
}

/// Unital embedding of level k into level k+1.
///
/// result(p,q) = a(ceil(p/2), ceil(q/2)) when p = q (mod 2), else 0 (1-based).
/// Each scalar entry is spread over an odd/even index pair, so the matrix
/// unit e_ij goes to e_{2i-1,2j-1} + e_{2i,2j}.
template <class T>
Matrix<T> embed(const Matrix<T>& a, int max_level = kDefaultMaxLevel) {
  const Level lv = level_of(a);
  require_level(lv.k + 1, max_level, "embed");
  const std::size_t n = a.dim();
  Matrix<T> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T& x = a(i, j);
      out(2 * i, 2 * j) = x;
      out(2 * i + 1, 2 * j + 1) = x;
    }
  }
  return out;
}

// Diagonal compression E_D: the vector of diagonal entries.
template <class T>
std::vector<T> diag_compress(const Matrix<T>& a) {
  std::vector<T> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a(i, i);
  return d;
}

// E_D as a matrix: off-diagonal entries zeroed.
template <class T>
Matrix<T> diag_part(const Matrix<T>& a) {
  Matrix<T> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out(i, i) = a(i, i);
  return out;
}

// Spread a diagonal vector the same way embed spreads a diagonal matrix.
template <class T>
std::vector<T> embed_diagonal(const std::vector<T>& d) {
  std::vector<T> out(2 * d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[2 * i] = out[2 * i + 1] = d[i];
  return out;
}

// tau(a) = trace(a) / N
template <class T>
T normalized_trace(const Matrix<T>& a) {
  T s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  if constexpr (std::is_same_v<T, QuadExtComplex>) {
    const QuadExt inv(Rational(1, static_cast<long long>(a.dim())));
    return {s.re * inv, s.im * inv};
  } else {
    return s / static_cast<double>(a.dim());
  }
}

template <class R>
struct Norms {
  R fro_sq{};     // sum |a_ij|^2
  R factor_sq{};  // tau(a* a) = 2^{-k} fro_sq
};

template <class T>
Norms<RealOf<T>> norms(const Matrix<T>& a) {
  const Level lv = level_of(a);
  Norms<RealOf<T>> out;
  out.fro_sq = frobenius_sq(a);
  if constexpr (std::is_same_v<T, QuadExtComplex>) {
    out.factor_sq = out.fro_sq * QuadExt(Rational(1, static_cast<long long>(lv.dim())));
  } else {
    out.factor_sq = std::ldexp(out.fro_sq, -lv.k);
  }
  return out;
}

// factor_sq(a - b), the squared factor 2-norm distance at a common level.
template <class T>
RealOf<T> factor_dist_sq(const Matrix<T>& a, const Matrix<T>& b) {
  return norms(a - b).factor_sq;
}

/// e_ij at the given level, 1-based. Throws std::out_of_range on bad indices.
template <class T = Complex>
Matrix<T> matrix_unit(Level level, std::size_t i, std::size_t j) {
  const std::size_t n = level.dim();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("matrix_unit: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside 1.." + std::to_string(n));
  }
  Matrix<T> out(n);
  out(i - 1, j - 1) = T(1);
  return out;
}

// x_k = sum_i (i/2^k) f_i: the discrete approximant of the generating
// operator, one value per dyadic cell.
std::vector<double> x_discrete(Level level);

struct StructureFlags {
  bool selfadjoint = false;
  bool positive = false;
  bool projection = false;
};

/// Structure classification with tolerance cfg.proj_tol.
///
/// selfadjoint: fro(A - A*) <= tol; projection: selfadjoint and
/// fro(A^2 - A) <= tol; positive: selfadjoint and the smallest eigenvalue of
/// the Hermitian part is >= -tol. Non-selfadjoint input is never positive.
StructureFlags classify(const CMatrix& a, const ToleranceConfig& cfg = {});

// Frobenius norms of A - A* and A^2 - A.
double selfadjoint_defect(const CMatrix& a);
double idempotence_defect(const CMatrix& a);

// Eigenvalues of (A + A*)/2, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace carpenter
