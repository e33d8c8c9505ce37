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

#include "carpenter/matrix.hpp"

#include <Eigen/Dense>

namespace carpenter {
namespace {

template <class T>
using RowMajor = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class T>
Matrix<T> gemm(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(a.dim());
  Matrix<T> c(a.dim());
  Eigen::Map<const RowMajor<T>> ma(a.data().data(), n, n);
  Eigen::Map<const RowMajor<T>> mb(b.data().data(), n, n);
  Eigen::Map<RowMajor<T>> mc(c.data().data(), n, n);
  mc.noalias() = ma * mb;
  return c;
}

}  // namespace

template <>
Matrix<double> multiply(const Matrix<double>& a, const Matrix<double>& b) {
  return gemm(a, b);
}

template <>
Matrix<Complex> multiply(const Matrix<Complex>& a, const Matrix<Complex>& b) {
  return gemm(a, b);
}

CMatrix to_complex(const RMatrix& m) {
  CMatrix out(m.dim());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = Complex(m.data()[i], 0.0);
  return out;
}

}  // namespace carpenter
