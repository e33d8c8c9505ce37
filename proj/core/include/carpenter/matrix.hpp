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
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "carpenter/scalar.hpp"

namespace carpenter {

/// Dense square matrix, row-major.
///
/// The scalar type selects the realization: `double` for real symmetric
/// constructions, `Complex` for the numeric tower and `QuadExtComplex` for
/// exact verification. Storage is 0-based; the domain functions built on top
/// (matrix units, gamma coefficients, block indices) use 1-based indices.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  Matrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n_ * n_) {
      throw std::invalid_argument("Matrix: entry array is not n x n");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  Matrix adjoint() const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = ScalarTraits<T>::conj((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same(const Matrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using CMatrix = Matrix<Complex>;
using RMatrix = Matrix<double>;

// Dense product. The double and Complex versions go through an optimized GEMM;
// other scalar types use the schoolbook loop.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const T& ail = a(i, l);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

template <>
Matrix<double> multiply(const Matrix<double>& a, const Matrix<double>& b);
template <>
Matrix<Complex> multiply(const Matrix<Complex>& a, const Matrix<Complex>& b);

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return multiply(a, b);
}

CMatrix to_complex(const RMatrix& m);

// sum |x_ij|^2
template <class T>
RealOf<T> frobenius_sq(const Matrix<T>& m) {
  RealOf<T> s{};
  for (const T& x : m.data()) s += ScalarTraits<T>::abs2(x);
  return s;
}

}  // namespace carpenter
