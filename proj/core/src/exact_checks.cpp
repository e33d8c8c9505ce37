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

#include "carpenter/exact_checks.hpp"

#include <stdexcept>

#include "carpenter/dyadic.hpp"
#include "carpenter/walsh.hpp"

namespace carpenter {
namespace {

const QuadExt& four_minus_2sqrt2() {
  static const QuadExt v(Rational(4), Rational(-2));
  return v;
}

const QuadExt& five_halves_minus_sqrt2() {
  static const QuadExt v(Rational(5, 2), Rational(-1));
  return v;
}

void require_2x2(const ExactMatrix& b) {
  if (b.dim() != 2) throw std::invalid_argument("exact checks need a 2x2 matrix");
}

struct EntryMasses {
  QuadExt off;   // |b12|^2 + |b21|^2
  QuadExt diag;  // |b11 - b22|^2
};

EntryMasses masses(const ExactMatrix& b) {
  return {abs2(b(0, 1)) + abs2(b(1, 0)), abs2(b(0, 0) - b(1, 1))};
}

QuadExtComplex rational_entry(Rng& rng) {
  auto draw = [&rng]() {
    const long long p = rng.uniform_int(-9, 9);
    const long long q = rng.uniform_int(1, 9);
    return QuadExt(Rational(p, q));
  };
  QuadExt re = draw();
  QuadExt im = draw();
  return {std::move(re), std::move(im)};
}

}  // namespace

QuadExt lambda_exact() { return QuadExt(Rational(5, 4), Rational(-1, 2)); }

ExactIterates exact_iterates(const ExactMatrix& b) {
  require_2x2(b);
  ExactIterates it;
  it.b1 = b;
  it.b2 = conjugate_by_w(embed(b), 1);
  it.b3 = conjugate_by_w(embed(it.b2), 2);
  return it;
}

ExactIdentity eq5_sides(const ExactMatrix& b) {
  const ExactIterates it = exact_iterates(b);
  const EntryMasses m = masses(b);
  return {frobenius_sq(it.b2 - embed(it.b1)), four_minus_2sqrt2() * m.off + m.diag};
}

bool eq5_exact_check(const ExactMatrix& b) { return eq5_sides(b).holds(); }

ExactIdentity eq6_sides(const ExactMatrix& b) {
  const ExactIterates it = exact_iterates(b);
  const EntryMasses m = masses(b);
  const QuadExt half(Rational(1, 2));
  return {half * frobenius_sq(it.b3 - embed(it.b2)),
          half * (four_minus_2sqrt2() * m.off + five_halves_minus_sqrt2() * m.diag)};
}

bool eq6_exact_check(const ExactMatrix& b) { return eq6_sides(b).holds(); }

std::optional<QuadExt> exact_step_ratio(const ExactMatrix& b) {
  const ExactIterates it = exact_iterates(b);
  const QuadExt den = frobenius_sq(it.b2 - embed(it.b1));
  if (den.is_zero()) return std::nullopt;
  return QuadExt(Rational(1, 2)) * frobenius_sq(it.b3 - embed(it.b2)) / den;
}

ExactMatrix random_rational_2x2(Rng& rng) {
  ExactMatrix b(2);
  for (auto& z : b.data()) z = rational_entry(rng);
  return b;
}

ExactSuiteResult run_exact_suite(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("exact suite needs at least one sample");
  Rng rng(seed);
  ExactSuiteResult out;
  const QuadExt lambda = lambda_exact();
  out.lambda_below_one = lambda < QuadExt(1);
  bool all = out.lambda_below_one;
  for (int s = 0; s < samples; ++s) {
    const ExactMatrix b = random_rational_2x2(rng);
    ExactSample row;
    row.eq5 = eq5_sides(b);
    row.eq6 = eq6_sides(b);
    row.ratio = exact_step_ratio(b);
    row.ratio_within_lambda = !row.ratio || *row.ratio <= lambda;
    out.identities_verified += (row.eq5.holds() ? 1 : 0) + (row.eq6.holds() ? 1 : 0);
    all = all && row.eq5.holds() && row.eq6.holds() && row.ratio_within_lambda;
    out.samples.push_back(std::move(row));
  }
  out.pass = all;
  return out;
}

}  // namespace carpenter
