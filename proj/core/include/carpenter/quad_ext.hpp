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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace carpenter {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Both parts are arbitrary-precision rationals kept in lowest terms with a
/// positive denominator, so equality is componentwise. The order is the one
/// induced by the real embedding and is decided without any floating point.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}
  QuadExt(long long a) : a_(a) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }
  // 1/sqrt(2) = (1/2) sqrt(2); keeps the rotation entries inside the field.
  static QuadExt inv_sqrt2() { return QuadExt(Rational(0), Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // -1, 0 or +1 according to the real value.
  int sign() const;
  // Galois conjugate a - b*sqrt(2).
  QuadExt galois_conjugate() const { return QuadExt(a_, -b_); }
  double to_double() const;
  // "a + b*sqrt2" with exact rationals, e.g. "9 - 4*sqrt2" or "5/4 - 1/2*sqrt2".
  std::string to_string() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  // Throws std::domain_error on division by zero.
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// re + i*im with both parts in Q(sqrt 2).
struct QuadExtComplex {
  QuadExt re;
  QuadExt im;

  QuadExtComplex() = default;
  QuadExtComplex(QuadExt r, QuadExt i = QuadExt()) : re(std::move(r)), im(std::move(i)) {}
  QuadExtComplex(long long r) : re(r) {}

  QuadExtComplex& operator+=(const QuadExtComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QuadExtComplex& operator-=(const QuadExtComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QuadExtComplex& operator*=(const QuadExtComplex& o) {
    QuadExt r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend QuadExtComplex operator+(QuadExtComplex x, const QuadExtComplex& y) { return x += y; }
  friend QuadExtComplex operator-(QuadExtComplex x, const QuadExtComplex& y) { return x -= y; }
  friend QuadExtComplex operator*(QuadExtComplex x, const QuadExtComplex& y) { return x *= y; }
  friend QuadExtComplex operator-(const QuadExtComplex& x) { return {-x.re, -x.im}; }
  friend bool operator==(const QuadExtComplex&, const QuadExtComplex&) = default;
};

inline QuadExtComplex conj(const QuadExtComplex& z) { return {z.re, -z.im}; }
// |z|^2 = re^2 + im^2, exact.
inline QuadExt abs2(const QuadExtComplex& z) { return z.re * z.re + z.im * z.im; }

}  // namespace carpenter
