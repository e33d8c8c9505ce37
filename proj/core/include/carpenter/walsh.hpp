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

#include <vector>

#include "carpenter/dyadic.hpp"

namespace carpenter {

/// The 4x4 rotation W_1: identity on coordinates 1 and 4, a 45 degree
/// rotation on coordinates 2 and 3,
///
///   (1 0 0 0; 0 s -s 0; 0 s s 0; 0 0 0 1),  s = 1/sqrt(2).
template <class T = Complex>
Matrix<T> w1() {
  const T s = ScalarTraits<T>::inv_sqrt2();
  Matrix<T> w(4);
  w(0, 0) = T(1);
  w(1, 1) = s;
  w(1, 2) = -s;
  w(2, 1) = s;
  w(2, 2) = s;
  w(3, 3) = T(1);
  return w;
}

/// W_m = direct sum of 2^{m-1} copies of W_1; acts at level m+1.
template <class T = Complex>
Matrix<T> w(int m, int max_level = kDefaultMaxLevel) {
  if (m < 1) throw std::invalid_argument("w: index m must be >= 1");
  require_level(m + 1, max_level, "w");
  const Matrix<T> block = w1<T>();
  const std::size_t n = Level{m + 1}.dim();
  Matrix<T> out(n);
  for (std::size_t b = 0; b < n; b += 4)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out(b + i, b + j) = block(i, j);
  return out;
}

/// In-place W_m X W_m* for X at level m+1, one 4x4 block at a time.
///
/// Every block X_IJ becomes W_1 X_IJ W_1*. Only rows and columns 2,3 of each
/// block move: row2' = s(row2 - row3), row3' = s(row2 + row3), and the same on
/// columns. Work is O(N^2); each block is processed by the same arithmetic
/// regardless of traversal order.
template <class T>
void conjugate_by_w_inplace(Matrix<T>& x, int m) {
  if (m < 1) throw std::invalid_argument("conjugate_by_w: index m must be >= 1");
  if (x.dim() != Level{m + 1}.dim()) {
    throw std::invalid_argument("conjugate_by_w: matrix is not at level m+1");
  }
  const T s = ScalarTraits<T>::inv_sqrt2();
  const std::size_t n = x.dim();
  for (std::size_t bi = 0; bi < n; bi += 4) {
    for (std::size_t bj = 0; bj < n; bj += 4) {
      // rows
      for (std::size_t c = bj; c < bj + 4; ++c) {
        T& r1 = x(bi + 1, c);
        T& r2 = x(bi + 2, c);
        const T a = r1;
        const T b = r2;
        r1 = s * (a - b);
        r2 = s * (a + b);
      }
      // columns
      for (std::size_t r = bi; r < bi + 4; ++r) {
        T& c1 = x(r, bj + 1);
        T& c2 = x(r, bj + 2);
        const T a = c1;
        const T b = c2;
        c1 = s * (a - b);
        c2 = s * (a + b);
      }
    }
  }
}

template <class T>
Matrix<T> conjugate_by_w(Matrix<T> x, int m) {
  conjugate_by_w_inplace(x, m);
  return x;
}

/// Diagonal of W X W* for diagonal X: in each group 4h-3..4h the outer two
/// entries stay, the middle two are replaced by their mean.
template <class T>
std::vector<T> diag_after_w(std::vector<T> d) {
  const Level lv = level_of_dim(d.size());
  if (lv.k < 2) throw std::invalid_argument("diag_after_w: level must be >= 2");
  for (std::size_t g = 0; g < d.size(); g += 4) {
    T mean = d[g + 1] + d[g + 2];
    if constexpr (std::is_same_v<T, QuadExtComplex>) {
      const QuadExt half(Rational(1, 2));
      mean = QuadExtComplex(mean.re * half, mean.im * half);
    } else {
      mean = mean / 2.0;
    }
    d[g + 1] = mean;
    d[g + 2] = mean;
  }
  return d;
}

}  // namespace carpenter
