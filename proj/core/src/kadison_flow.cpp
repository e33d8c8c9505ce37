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

#include "carpenter/kadison_flow.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carpenter/exact_checks.hpp"
#include "carpenter/format.hpp"

namespace carpenter {
namespace {

std::optional<std::vector<double>> real_diagonal(const CMatrix& a) {
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a(i, i).imag() != 0.0) return std::nullopt;
    d[i] = a(i, i).real();
  }
  return d;
}

void require_diag_length(std::span<const double> d, int k) {
  if (k < 1) throw std::invalid_argument("seed level k must be >= 1");
  if (d.size() != Level{k}.dim()) {
    throw std::invalid_argument("diagonal length " + std::to_string(d.size()) +
                                " does not match level " + std::to_string(k));
  }
}

// factor_sq(big - embed(small)) without materializing the embedding.
double factor_dist_sq_to_embed(const CMatrix& big, const CMatrix& small) {
  const std::size_t n = big.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex e = ((i ^ j) & 1u) ? Complex(0.0) : small(i / 2, j / 2);
      sum += std::norm(big(i, j) - e);
    }
  }
  return std::ldexp(sum, -level_of(big).k);
}

}  // namespace

SeedSpec SeedSpec::from_matrix(CMatrix a) {
  const Level lv = level_of(a);
  if (lv.k < 1) throw std::invalid_argument("seed level must be >= 1");
  SeedSpec s{lv, std::move(a), std::nullopt};
  s.real_diag = real_diagonal(s.a);
  return s;
}

RunResult run(const SeedSpec& seed, int max_level, double stop_tol) {
  if (seed.k.k >= max_level) {
    throw LevelOverflow("run: seed level " + std::to_string(seed.k.k) +
                        " must be below max level " + std::to_string(max_level));
  }
  RunResult out;
  out.trace.k = seed.k.k;
  CMatrix prev = seed.a;
  int n = 1;
  while (true) {
    const int level = seed.k.k + n;  // level of A(n+1)
    if (level > max_level) {
      out.trace.truncated = true;
      break;
    }
    CMatrix next = step(prev, max_level);
    ++n;
    StepRecord rec;
    rec.n = n;
    rec.level = level;
    rec.delta = factor_dist_sq_to_embed(next, prev);
    if (seed.real_diag) {
      rec.diag_sup_err = diag_deviation(next, *seed.real_diag, seed.k.k, n).sup_err;
    }
    if (!out.trace.steps.empty()) {
      StepRecord& last = out.trace.steps.back();
      if (last.delta > 0.0) last.ratio = rec.delta / last.delta;
    }
    out.trace.steps.push_back(rec);
    prev = std::move(next);
    if (rec.delta < stop_tol) break;
  }
  out.final_matrix = std::move(prev);
  return out;
}

std::vector<CMatrix> iterates(const CMatrix& seed, int n_max, int max_level) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 1)));
  out.push_back(seed);
  for (int n = 2; n <= n_max; ++n) out.push_back(step(out.back(), max_level));
  return out;
}

double gamma(std::span<const double> d, int l, int h, int n) {
  if (n < 1) throw std::out_of_range("gamma: n must be >= 1");
  const long long half_len = 1LL << (n - 1);
  if (l < 1 || 2 * static_cast<std::size_t>(l) > d.size() || h < 0 || h > half_len) {
    throw std::out_of_range("gamma: index out of range");
  }
  const double lo = d[2 * l - 2];
  const double hi = d[2 * l - 1];
  if (h == 0) return lo;
  if (h == half_len) return hi;
  return lo + std::ldexp(static_cast<double>(h), -(n - 1)) * (hi - lo);
}

std::vector<double> predicted_diagonal(std::span<const double> d, int k, int n,
                                       int max_level) {
  require_diag_length(d, k);
  if (n < 1) throw std::invalid_argument("predicted_diagonal: n must be >= 1");
  require_level(k + n - 1, max_level, "predicted_diagonal");
  const std::size_t segments = Level{k - 1}.dim();
  const int pairs = 1 << (n - 1);
  std::vector<double> out(Level{k + n - 1}.dim());
  const std::size_t stride = std::size_t{1} << n;
  for (std::size_t l = 1; l <= segments; ++l) {
    for (int h = 1; h <= pairs; ++h) {
      const std::size_t even = stride * (l - 1) + 2 * static_cast<std::size_t>(h);  // 1-based
      out[even - 2] = gamma(d, static_cast<int>(l), h - 1, n);
      out[even - 1] = gamma(d, static_cast<int>(l), h, n);
    }
  }
  return out;
}

double f_piece(double t, std::span<const double> d, int k, int j) {
  const double lo = d[2 * j - 2];
  const double hi = d[2 * j - 1];
  const double scale = std::ldexp(1.0, k - 1);
  return lo + scale * (t - (j - 1) / scale) * (hi - lo);
}

double f_eval(double t, std::span<const double> d, int k) {
  require_diag_length(d, k);
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("f_eval: t outside [0,1]");
  if (t == 1.0) return d.back();
  const int j = static_cast<int>(std::floor(std::ldexp(t, k - 1))) + 1;
  return f_piece(t, d, k, j);
}

DiagDeviation diag_deviation(const CMatrix& a_n, std::span<const double> d, int k, int n,
                             double tol) {
  require_diag_length(d, k);
  const int level = k + n - 1;
  if (a_n.dim() != Level{level}.dim()) {
    throw std::invalid_argument("diag_deviation: matrix is not at level k+n-1");
  }
  DiagDeviation out{0.0, true, true};
  const std::size_t seg_len = std::size_t{1} << n;
  const double inv_pow_n = std::ldexp(1.0, -n);
  for (std::size_t i = 1; i <= a_n.dim(); ++i) {
    const int l = static_cast<int>((i - 1) / seg_len) + 1;
    const double t = std::ldexp(static_cast<double>(i), -level);
    const double dev = a_n(i - 1, i - 1).real() - f_piece(t, d, k, l);
    out.sup_err = std::max(out.sup_err, std::abs(dev));
    if (i % 2 == 0) {
      if (std::abs(dev) > tol) out.even_exact = false;
    } else {
      const double expected = -(d[2 * l - 1] - d[2 * l - 2]) * inv_pow_n;
      if (std::abs(dev - expected) > tol) out.odd_structured = false;
    }
  }
  return out;
}

DistanceScaling verify_distance_scaling(const CMatrix& a, const CMatrix& b, int n_max,
                                        int max_level, double rel_tol) {
  const Level lv = level_of(a);
  if (b.dim() != a.dim()) throw std::invalid_argument("distance scaling: seed levels differ");
  if (n_max < 1) throw std::invalid_argument("distance scaling: n_max must be >= 1");
  require_level(lv.k + n_max - 1, max_level, "verify_distance_scaling");
  DistanceScaling out;
  out.expected = std::ldexp(frobenius_sq(b - a), -lv.k);
  CMatrix an = a;
  CMatrix bn = b;
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      an = step(an, max_level);
      bn = step(bn, max_level);
    }
    const double v = factor_dist_sq(bn, an);
    out.series.push_back(v);
    const double err = out.expected == 0.0 ? std::abs(v) : std::abs(v - out.expected) / out.expected;
    out.max_rel_err = std::max(out.max_rel_err, err);
    if (err > rel_tol) ok = false;
  }
  out.ok = ok;
  return out;
}

std::string trace_to_json(const IterationTrace& trace) {
  nlohmann::ordered_json j;
  j["k"] = trace.k;
  j["lambda"] = kLambda;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json row;
    row["n"] = s.n;
    row["level"] = s.level;
    row["delta"] = s.delta;
    row["ratio"] = s.ratio ? nlohmann::ordered_json(*s.ratio) : nlohmann::ordered_json(nullptr);
    row["diag_sup_err"] =
        s.diag_sup_err ? nlohmann::ordered_json(*s.diag_sup_err) : nlohmann::ordered_json(nullptr);
    j["steps"].push_back(std::move(row));
  }
  j["truncated"] = trace.truncated;
  return j.dump(2) + "\n";
}

std::string trace_to_csv(const IterationTrace& trace) {
  std::ostringstream os;
  os << "n,level,delta,ratio,diag_sup_err\n";
  for (const auto& s : trace.steps) {
    os << s.n << ',' << s.level << ',' << format_double(s.delta) << ','
       << format_optional(s.ratio) << ',' << format_optional(s.diag_sup_err) << '\n';
  }
  return os.str();
}

}  // namespace carpenter
