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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carpenter/dyadic.hpp"

namespace carpenter {

// Target profile g : [0,1] -> [0,1].
using Profile = std::function<double(double)>;

struct NamedProfile {
  std::string name;
  Profile g;
};

/// Parses `linear`, `square`, `const:<v>`, `step:<t0>` (0 below t0, 1 from
/// t0 on) or a path to a file with 2^K samples, one per line, read as the
/// piecewise-constant profile on the level-K cells. Throws FormatError.
NamedProfile parse_profile(const std::string& spec);

// Dyadic step function g_k = sum_i g_{i,k} chi_{I_i^k} with integral mass.
struct DyadicStep {
  int k = 0;
  std::vector<double> values;
  int mass = 0;
};

/// Cell averages of g by the 16-point midpoint rule, then a uniform shift
/// (round(S) - S)/2^k toward the nearest integer mass, clamping to [0,1] and
/// handing the clamped excess back in proportion to the remaining headroom.
/// Throws std::domain_error if g leaves [0,1] or is not finite, and
/// InfeasibleTarget if the mass cannot be placed.
DyadicStep discretize(const Profile& g, int k, int max_level = kDefaultMaxLevel);

enum class Heuristic { fresh, phase_align };
const char* to_string(Heuristic h);
// Throws std::invalid_argument on anything but "fresh" / "phase_align".
Heuristic parse_heuristic(const std::string& name);

struct ChainLink {
  int k = 0;
  CMatrix a;
  double mass = 0.0;                             // trace of A_k
  std::optional<double> fro_sq_to_embed_prev;    // fro^2(A_k - embed A_{k-1})
  std::optional<double> ratio;                   // r_k
};

/// Consecutive levels A_{k0}, A_{k0+1}, ... and the coherence ratios
/// r_k = (1/2) fro^2(A_{k+1} - embed A_k) / fro^2(A_k - embed A_{k-1}),
/// undefined when the denominator vanishes or A_{k+1} is absent.
struct ProjectionChain {
  std::vector<ChainLink> links;

  // Throws std::invalid_argument unless levels increase by one.
  static ProjectionChain from_matrices(std::vector<CMatrix> mats);
};

struct PhaseAlignStats {
  double initial = 0.0;  // fro^2(A - T)
  double final = 0.0;    // fro^2(D A D* - T)
  int sweeps = 0;
};

/// D A D* for a diagonal unitary D = diag(exp(i theta)) found by exact
/// coordinate descent on each theta_p, sweeping until a sweep improves
/// fro^2(. - T) by less than 1e-10 or 50 sweeps have run. The objective never
/// increases and the diagonal of A is copied through unchanged.
CMatrix phase_align(const CMatrix& a, const CMatrix& target, PhaseAlignStats* stats = nullptr);

/// A_k = horn_projection(discretize(g, k)) for k = k_min..k_max; with
/// phase_align each A_k (k > k_min) is aligned to embed(A_{k-1}).
ProjectionChain synthesize_chain(const Profile& g, int k_min, int k_max, Heuristic heuristic,
                                 int max_level = kDefaultMaxLevel);

struct RatioReport {
  std::vector<int> levels;
  std::vector<std::optional<double>> ratios;
  // Max over the last ceil(half) of the defined ratios; an estimate only.
  std::optional<double> limsup_estimate;
};

// Throws std::invalid_argument for chains shorter than 3.
RatioReport ratio_report(const ProjectionChain& chain);

// CSV columns k,mass,fro_dist_to_embed_prev,r_k; JSON mirrors them plus the
// limsup estimate. fro_dist_to_embed_prev is the squared Frobenius distance.
std::string chain_to_csv(const ProjectionChain& chain);
std::string chain_to_json(const ProjectionChain& chain, const std::string& profile,
                          const std::string& heuristic);

}  // namespace carpenter
