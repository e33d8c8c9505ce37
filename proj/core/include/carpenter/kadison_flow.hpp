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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carpenter/dyadic.hpp"
#include "carpenter/walsh.hpp"

namespace carpenter {

/// One iteration A(n) -> A(n+1) = W_L embed(A(n)) W_L*, L = level of A(n).
template <class T>
Matrix<T> step(const Matrix<T>& a, int max_level = kDefaultMaxLevel) {
  const Level lv = level_of(a);
  if (lv.k < 1) throw std::invalid_argument("step: seed level must be >= 1");
  require_level(lv.k + 1, max_level, "step");
  // Fused embed and conjugation: each 4x4 output block is W_1 E W_1* where E
  // is the embedded image of one 2x2 block of `a`.
  const T s = ScalarTraits<T>::inv_sqrt2();
  const std::size_t n = 2 * a.dim();
  Matrix<T> next(n);
  T e[4][4];
  for (std::size_t bi = 0; bi < n; bi += 4) {
    for (std::size_t bj = 0; bj < n; bj += 4) {
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          e[r][c] = ((r ^ c) & 1u) ? T{} : a(bi / 2 + r / 2, bj / 2 + c / 2);
      for (std::size_t c = 0; c < 4; ++c) {
        const T x = e[1][c];
        const T y = e[2][c];
        e[1][c] = s * (x - y);
        e[2][c] = s * (x + y);
      }
      for (std::size_t r = 0; r < 4; ++r) {
        const T x = e[r][1];
        const T y = e[r][2];
        e[r][1] = s * (x - y);
        e[r][2] = s * (x + y);
        for (std::size_t c = 0; c < 4; ++c) next(bi + r, bj + c) = e[r][c];
      }
    }
  }
  return next;
}

// Seed A = A(1) at level k, with its diagonal cached when it is real.
struct SeedSpec {
  Level k;
  CMatrix a;
  std::optional<std::vector<double>> real_diag;

  // Throws std::invalid_argument unless a sits at a level >= 1.
  static SeedSpec from_matrix(CMatrix a);
};

struct StepRecord {
  int n = 0;
  int level = 0;
  double delta = 0.0;                  // factor_sq(A(n) - embed A(n-1))
  std::optional<double> ratio;         // delta_{n+1} / delta_n
  std::optional<double> diag_sup_err;  // sup |diag A(n) - f(samples)|
};

struct IterationTrace {
  int k = 0;
  std::vector<StepRecord> steps;
  bool truncated = false;  // stopped by the level cap, not by convergence
};

struct RunResult {
  IterationTrace trace;
  CMatrix final_matrix;
};

/// Iterates from the seed, recording delta_n for n >= 2, until
/// delta_n < stop_tol or the level cap is reached.
RunResult run(const SeedSpec& seed, int max_level, double stop_tol = 1e-12);

// Every iterate A(1), ..., A(n_max), kept in memory.
std::vector<CMatrix> iterates(const CMatrix& seed, int n_max, int max_level = kDefaultMaxLevel);

/// gamma^n_{l,h} = d_{2l-1} + (h / 2^{n-1}) (d_{2l} - d_{2l-1}); l is 1-based,
/// h in 0..2^{n-1}. Throws std::out_of_range outside those ranges.
double gamma(std::span<const double> d, int l, int h, int n);

/// Closed-form diagonal of A(n) for a seed with diagonal d at level k:
/// position 2^n(l-1)+2h-1 holds gamma^n_{l,h-1}, position 2^n(l-1)+2h holds
/// gamma^n_{l,h}, for l = 1..2^{k-1}, h = 1..2^{n-1}.
std::vector<double> predicted_diagonal(std::span<const double> d, int k, int n,
                                       int max_level = kDefaultMaxLevel);

/// Piecewise-linear limit profile: on [(j-1)/2^{k-1}, j/2^{k-1}) it runs from
/// d_{2j-1} with slope 2^{k-1}(d_{2j} - d_{2j-1}); f(1) = d_{2^k}.
/// Throws std::domain_error for t outside [0,1].
double f_eval(double t, std::span<const double> d, int k);

// Value of the j-th linear piece (1-based) at t, i.e. f on the closed interval.
double f_piece(double t, std::span<const double> d, int k, int j);

struct DiagDeviation {
  double sup_err = 0.0;
  bool even_exact = false;
  bool odd_structured = false;
};

/// Compares diag A(n) with f sampled at i / 2^{k+n-1}.
///
/// Sample i belongs to the segment l = ceil(i / 2^n) and is evaluated on that
/// segment's closed linear piece, so the last sample of a segment uses the
/// left limit of f at the breakpoint (the two agree whenever f is continuous).
DiagDeviation diag_deviation(const CMatrix& a_n, std::span<const double> d, int k, int n,
                             double tol = 1e-12);

struct DistanceScaling {
  bool ok = false;
  double expected = 0.0;       // 2^{-k} fro^2(B - A)
  std::vector<double> series;  // factor_sq(B(n) - A(n)), n = 1..n_max
  double max_rel_err = 0.0;
};

/// Runs A and B in lockstep for n = 1..n_max and checks the factor-norm
/// distance stays at 2^{-k} fro^2(B - A) (relative tolerance rel_tol).
DistanceScaling verify_distance_scaling(const CMatrix& a, const CMatrix& b, int n_max,
                                        int max_level = kDefaultMaxLevel,
                                        double rel_tol = 1e-10);

// Trace serializers: JSON is canonical, CSV mirrors it with columns
// n,level,delta,ratio,diag_sup_err (empty cells for null).
std::string trace_to_json(const IterationTrace& trace);
std::string trace_to_csv(const IterationTrace& trace);

}  // namespace carpenter
