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
#include <complex>

#include "carpenter/quad_ext.hpp"

namespace carpenter {

using Complex = std::complex<double>;

// Scalar realizations used on the tower. Each provides the real type of
// |x|^2, conjugation, and the rotation constant 1/sqrt(2).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  using Real = double;
  static double conj(double x) { return x; }
  static double abs2(double x) { return x * x; }
  static double inv_sqrt2() { return M_SQRT1_2; }
  static double from_real(double x) { return x; }
};

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static double abs2(const Complex& z) { return std::norm(z); }
  static Complex inv_sqrt2() { return Complex(M_SQRT1_2, 0.0); }
  static Complex from_real(double x) { return Complex(x, 0.0); }
};

template <>
struct ScalarTraits<QuadExtComplex> {
  using Real = QuadExt;
  static QuadExtComplex conj(const QuadExtComplex& z) { return carpenter::conj(z); }
  static QuadExt abs2(const QuadExtComplex& z) { return carpenter::abs2(z); }
  static QuadExtComplex inv_sqrt2() { return QuadExtComplex(QuadExt::inv_sqrt2()); }
  static QuadExtComplex from_real(const QuadExt& x) { return QuadExtComplex(x); }
};

template <class T>
using RealOf = typename ScalarTraits<T>::Real;

}  // namespace carpenter
