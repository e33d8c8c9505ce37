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

#include "carpenter/carpenter_synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "carpenter/dyadic.hpp"
#include "carpenter/errors.hpp"
#include "carpenter/format.hpp"

namespace carpenter {
namespace {

constexpr double kSelfadjointTol = 1e-12;
constexpr double kDiagTol = 1e-9;
// Values closer than this are treated as equal when picking rotation partners.
constexpr double kPivotSlack = 1e-13;

double sum_of(std::span<const double> d) { return std::accumulate(d.begin(), d.end(), 0.0); }

// Rotate the (i,j) plane: rows then columns by G = (c s; -s c).
void rotate_plane(RMatrix& w, std::size_t i, std::size_t j, double c, double s) {
  const std::size_t n = w.dim();
  for (std::size_t q = 0; q < n; ++q) {
    const double wi = w(i, q);
    const double wj = w(j, q);
    w(i, q) = c * wi + s * wj;
    w(j, q) = -s * wi + c * wj;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double wi = w(r, i);
    const double wj = w(r, j);
    w(r, i) = c * wi + s * wj;
    w(r, j) = -s * wi + c * wj;
  }
}

}  // namespace

DiagonalTarget DiagonalTarget::make(std::vector<double> d, double feas_tol) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] >= 0.0 && d[i] <= 1.0)) {
      throw InfeasibleTarget("target entry " + std::to_string(i + 1) + " = " +
                             format_double(d[i]) + " is outside [0,1]");
    }
  }
  const double total = sum_of(d);
  const double m = std::round(total);
  if (std::abs(total - m) > feas_tol) {
    throw InfeasibleTarget("target trace " + format_double(total) +
                           " is not an integer (feasibility tolerance " +
                           format_double(feas_tol) + ")");
  }
  return DiagonalTarget(std::move(d), static_cast<int>(m));
}

bool majorization_feasible(std::span<const double> d, double feas_tol) {
  for (double x : d)
    if (!(x >= 0.0 && x <= 1.0)) return false;
  const double total = sum_of(d);
  return std::abs(total - std::round(total)) <= feas_tol;
}

std::vector<double> random_feasible_target(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform01();
  const double m = static_cast<double>(rng.uniform_int(0, static_cast<long long>(n)));
  auto mass_at = [&x](double t) {
    double s = 0.0;
    for (double v : x) s += std::clamp(v + t, 0.0, 1.0);
    return s;
  };
  double lo = -1.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mass_at(mid) < m ? lo : hi) = mid;
  }
  for (double& v : x) v = std::clamp(v + hi, 0.0, 1.0);
  // Put the remaining rounding residue on one interior entry.
  const double residue = m - sum_of(x);
  for (double& v : x) {
    if (v + residue >= 0.0 && v + residue <= 1.0 && v > 0.0 && v < 1.0) {
      v += residue;
      break;
    }
  }
  return x;
}

HornResult horn_projection(const DiagonalTarget& target, const ToleranceConfig& cfg) {
  cfg.validate();
  const std::span<const double> d = target.values();
  const std::size_t n = d.size();
  HornResult out;
  if (n == 0) return out;

  std::vector<double> a(n, 0.0);
  for (int s = 0; s < target.rank(); ++s) a[static_cast<std::size_t>(s)] = 1.0;
  RMatrix w = RMatrix::diagonal(std::span<const double>(a));
  std::vector<char> active(n, 1);
  std::vector<std::size_t> slot_of(n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t x, std::size_t y) { return d[x] > d[y]; });

  for (std::size_t step = 0; step + 1 < n; ++step) {
    const std::size_t pos = order[step];
    const double t = d[pos];

    std::size_t i = n;
    for (std::size_t s = 0; s < n; ++s)
      if (active[s] && (i == n || a[s] > a[i])) i = s;

    std::size_t fixed = i;
    if (a[i] - t > kPivotSlack) {
      std::size_t j = n;
      for (std::size_t s = 0; s < n; ++s) {
        if (!active[s] || s == i || a[s] > t + kPivotSlack) continue;
        if (j == n || a[s] > a[j]) j = s;
      }
      if (j == n) {
        throw NumericalFailure("horn_projection: no rotation partner for target " +
                               format_double(t));
      }
      if (t - a[j] <= kPivotSlack) {
        fixed = j;  // already at its target, no rotation needed
      } else {
        const double c2 = std::clamp((t - a[j]) / (a[i] - a[j]), 0.0, 1.0);
        const double c = std::sqrt(c2);
        const double s = -std::sqrt(1.0 - c2);  // keeps the new (i,j) entry >= 0
        rotate_plane(w, i, j, c, s);
        const double rest = a[i] + a[j] - t;
        w(i, i) = t;
        w(j, j) = rest;
        a[i] = t;
        a[j] = rest;
        ++out.rotations;
      }
    }
    w(fixed, fixed) = t;
    a[fixed] = t;
    active[fixed] = 0;
    slot_of[pos] = fixed;
  }
  for (std::size_t s = 0; s < n; ++s)
    if (active[s]) slot_of[order[n - 1]] = s;

  out.p = RMatrix(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      const double v = q == p ? w(slot_of[p], slot_of[p])
                              : 0.5 * (w(slot_of[p], slot_of[q]) + w(slot_of[q], slot_of[p]));
      out.p(p, q) = v;
      out.p(q, p) = v;
    }

  const ProjectionReport report = verify_projection(to_complex(out.p), d, cfg, false);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "horn_projection post-check failed: diag_err=" << report.diag_err
        << " idempotence_err=" << report.idempotence_err
        << " selfadjoint_err=" << report.selfadjoint_err;
    throw NumericalFailure(msg.str());
  }
  return out;
}

CMatrix circulant_projection(std::size_t n, std::size_t m) {
  if (n == 0 || m > n) {
    throw std::out_of_range("circulant_projection: need 0 <= m <= N and N >= 1");
  }
  // c_r = (1/N) sum_{s<m} exp(-2 pi i s r / N); P_ij = c_{(j-i) mod N}.
  std::vector<Complex> c(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  c[0] = Complex(static_cast<double>(m) * inv_n, 0.0);
  for (std::size_t r = 1; r <= n / 2; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t s = 0; s < m; ++s) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((s * r) % n) * inv_n;
      acc += Complex(std::cos(angle), std::sin(angle));
    }
    c[r] = acc * inv_n;
    c[n - r] = std::conj(c[r]);
  }
  if (n % 2 == 0) c[n / 2] = Complex(c[n / 2].real(), 0.0);
  CMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = c[(j + n - i) % n];
  return p;
}

bool orthogonality_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("orthogonality_check: N must be >= 2");
  RMatrix u(n);
  for (std::size_t i = 0; i < n; ++i) u((i + 1) % n, i) = 1.0;
  RMatrix power = RMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double want = j == 0 ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (power(i, i) != want) return false;
    power = multiply(u, power);
  }
  return true;
}

CMatrix discrete_carpenter(std::size_t n, const BlockSpec& blocks, double feas_tol) {
  std::vector<char> used(n, 0);
  CMatrix p(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    if (!(blk.alpha >= 0.0 && blk.alpha <= 1.0)) {
      throw InfeasibleTarget("block " + std::to_string(b + 1) + ": alpha outside [0,1]");
    }
    for (std::size_t idx : blk.indices) {
      if (idx < 1 || idx > n) {
        throw std::invalid_argument("block " + std::to_string(b + 1) + ": index " +
                                    std::to_string(idx) + " outside 1.." + std::to_string(n));
      }
      if (used[idx - 1]) {
        throw std::invalid_argument("block " + std::to_string(b + 1) + ": index " +
                                    std::to_string(idx) + " appears in more than one block");
      }
      used[idx - 1] = 1;
    }
    const std::size_t size = blk.indices.size();
    if (size == 0) continue;
    const double mass = blk.alpha * static_cast<double>(size);
    const double m = std::round(mass);
    if (std::abs(mass - m) > feas_tol) {
      throw InfeasibleTarget("block " + std::to_string(b + 1) + ": alpha*|block| = " +
                             format_double(mass) +
                             " is not an integer; use horn_projection on the flattened target");
    }
    const CMatrix c = circulant_projection(size, static_cast<std::size_t>(m));
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) p(blk.indices[x] - 1, blk.indices[y] - 1) = c(x, y);
  }
  return p;
}

BlockSpec blocks_from_target(std::span<const double> d) {
  BlockSpec blocks;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const Block& b) { return b.alpha == d[i]; });
    if (it == blocks.end()) {
      blocks.push_back(Block{{i + 1}, d[i]});
    } else {
      it->indices.push_back(i + 1);
    }
  }
  return blocks;
}

ProjectionReport verify_projection(const CMatrix& p, std::span<const double> d,
                                   const ToleranceConfig& cfg, bool check_eigen) {
  if (p.dim() != d.size()) throw std::invalid_argument("verify_projection: size mismatch");
  ProjectionReport r;
  r.selfadjoint_err = selfadjoint_defect(p);
  r.idempotence_err = idempotence_defect(p);
  double trace = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    r.diag_err = std::max(r.diag_err, std::abs(p(i, i) - Complex(d[i], 0.0)));
    trace += p(i, i).real();
  }
  const double m = std::round(sum_of(d));
  r.trace_err = std::abs(trace - m);
  bool ok = r.selfadjoint_err <= kSelfadjointTol && r.idempotence_err <= cfg.proj_tol &&
            r.diag_err <= kDiagTol && r.trace_err <= kDiagTol;
  if (check_eigen) {
    r.eigen_checked = true;
    for (double ev : hermitian_eigenvalues(p)) {
      r.eigen_err = std::max(r.eigen_err, std::min(std::abs(ev), std::abs(ev - 1.0)));
      if (ev > 0.5) ++r.eigen_near_one;
    }
    ok = ok && r.eigen_err <= cfg.proj_tol && r.eigen_near_one == static_cast<int>(m);
  }
  r.pass = ok;
  return r;
}

}  // namespace carpenter
