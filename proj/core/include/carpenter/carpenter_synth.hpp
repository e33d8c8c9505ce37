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
#include <vector>

#include "carpenter/level.hpp"
#include "carpenter/matrix.hpp"
#include "carpenter/random.hpp"

namespace carpenter {

inline constexpr double kFeasTol = 1e-9;

/// Prescribed diagonal d in [0,1]^N whose sum is an integer m (within the
/// feasibility tolerance).
class DiagonalTarget {
 public:
  // Throws InfeasibleTarget when an entry leaves [0,1] or the trace is not
  // integral within feas_tol. Inputs are never rounded.
  static DiagonalTarget make(std::vector<double> d, double feas_tol = kFeasTol);

  std::size_t size() const { return d_.size(); }
  std::span<const double> values() const { return d_; }
  int rank() const { return m_; }

 private:
  DiagonalTarget(std::vector<double> d, int m) : d_(std::move(d)), m_(m) {}
  std::vector<double> d_;
  int m_ = 0;
};

// 0 <= d_i <= 1 and sum(d) integral: in [0,1]^N this is exactly majorization
// by (1^m, 0^{N-m}).
bool majorization_feasible(std::span<const double> d, double feas_tol = kFeasTol);

/// Random feasible target of length n: rank m uniform in 0..n, entries
/// uniform in [0,1] and then shifted by a common t with clamping so that
/// sum(clamp(x + t, 0, 1)) = m.
std::vector<double> random_feasible_target(std::size_t n, Rng& rng);

struct HornResult {
  RMatrix p;
  int rotations = 0;
};

/// Real symmetric projection with diagonal d, built by a chain of plane
/// rotations starting from the diagonal projection with m ones.
///
/// Targets are fixed in descending order (ties: lower position first). Each
/// step takes the active slot i holding the largest value and the active
/// slot j holding the largest value not above the target t, and rotates the
/// (i,j) plane so slot i holds exactly t; slot j keeps a_i + a_j - t. The
/// inactive block stays diagonal, so one rotation fixes one entry and at most
/// N-1 rotations are used. The new off-diagonal entry is made nonnegative.
/// A final coordinate permutation moves slots to target positions.
///
/// Throws InfeasibleTarget if the target is not feasible and NumericalFailure
/// if the result misses the post-conditions (diag within 1e-9, symmetric,
/// ||P^2 - P||_F <= cfg.proj_tol).
HornResult horn_projection(const DiagonalTarget& target, const ToleranceConfig& cfg = {});

/// P = F* diag(1_S) F with F the unitary DFT and S = {0..m-1}. Circulant, with
/// every diagonal entry m/N. Throws std::out_of_range unless 0 <= m <= N.
CMatrix circulant_projection(std::size_t n, std::size_t m);

/// True iff for the cyclic shift u, diag(u^j) = 0 for j = 1..N-1 and diag(u^0)
/// is all ones, i.e. the diagonal compression maps the circulant algebra onto
/// scalars. Throws std::invalid_argument for n < 2.
bool orthogonality_check(std::size_t n);

struct Block {
  std::vector<std::size_t> indices;  // 1-based positions
  double alpha = 0.0;
};
using BlockSpec = std::vector<Block>;

/// Block-diagonal assembly of circulant_projection(|b|, alpha|b|) on each
/// block; positions outside every block get diagonal 0. Throws
/// std::invalid_argument on overlapping/out-of-range indices and
/// InfeasibleTarget when some alpha|b| is not an integer (the message points
/// at horn_projection on the flattened target).
CMatrix discrete_carpenter(std::size_t n, const BlockSpec& blocks, double feas_tol = kFeasTol);

// Groups positions by equal target value into a BlockSpec.
BlockSpec blocks_from_target(std::span<const double> d);

struct ProjectionReport {
  double selfadjoint_err = 0.0;  // fro(P - P*)
  double idempotence_err = 0.0;  // fro(P^2 - P)
  double diag_err = 0.0;         // max |P_ii - d_i|
  double trace_err = 0.0;        // |tr P - m|
  bool eigen_checked = false;
  double eigen_err = 0.0;  // max distance of an eigenvalue to {0,1}
  int eigen_near_one = 0;
  bool pass = false;
};

/// Post-checks for a synthesized projection: selfadjoint <= 1e-12,
/// idempotent <= cfg.proj_tol, diagonal <= 1e-9 entrywise, trace = m to 1e-9,
/// and (when check_eigen) eigenvalues within proj_tol of {0,1} with exactly m
/// of them near 1.
ProjectionReport verify_projection(const CMatrix& p, std::span<const double> d,
                                   const ToleranceConfig& cfg = {}, bool check_eigen = false);

}  // namespace carpenter
