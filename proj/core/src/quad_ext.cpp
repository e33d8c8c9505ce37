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

#include "carpenter/quad_ext.hpp"

#include <cmath>
#include <stdexcept>

namespace carpenter {
namespace {

int rational_sign(const Rational& r) { return r.sign(); }

}  // namespace

int QuadExt::sign() const {
  // a + b*sqrt2 > 0 iff (a>=0, b>=0, not both zero) or (a>=0, b<0, a^2 > 2b^2)
  // or (a<0, b>0, 2b^2 > a^2). Negative is the mirror image.
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  const Rational a2 = a_ * a_;
  const Rational two_b2 = 2 * b_ * b_;
  if (sa > 0) return a2 > two_b2 ? 1 : -1;  // a > 0 > b; a^2 == 2b^2 impossible
  return two_b2 > a2 ? 1 : -1;              // a < 0 < b
}

double QuadExt::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0);
}

std::string QuadExt::to_string() const {
  auto surd = [](const Rational& c) {
    return c == 1 ? std::string("sqrt2") : c.str() + "*sqrt2";
  };
  if (b_ == 0) return a_.str();
  if (a_ == 0) return b_ < 0 ? "-" + surd(-b_) : surd(b_);
  return a_.str() + (b_ < 0 ? " - " + surd(-b_) : " + " + surd(b_));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r, r = sqrt2
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("QuadExt division by zero");
  // x / y = x * conj(y) / (c^2 - 2 d^2); the norm is a nonzero rational since
  // sqrt2 is irrational.
  const Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  *this *= o.galois_conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

}  // namespace carpenter
