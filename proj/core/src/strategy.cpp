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

#include "carpenter/strategy.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>

#include "carpenter/carpenter_synth.hpp"
#include "carpenter/errors.hpp"
#include "carpenter/format.hpp"

namespace carpenter {
namespace {

constexpr int kQuadraturePoints = 16;
constexpr int kMaxSweeps = 50;
constexpr double kSweepImprovement = 1e-10;

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw FormatError(what + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw FormatError(what + ": '" + text + "' is not a number");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

NamedProfile profile_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("profile '" + path + "': not a built-in name and not a readable file");
  auto samples = std::make_shared<std::vector<double>>();
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const double v = parse_number(line, "profile file " + path);
    if (v < 0.0 || v > 1.0) throw FormatError("profile file " + path + ": sample outside [0,1]");
    samples->push_back(v);
  }
  if (samples->empty() || !is_power_of_two(samples->size())) {
    throw FormatError("profile file " + path + ": need 2^K samples, got " +
                      std::to_string(samples->size()));
  }
  return {"file:" + path, [samples](double t) {
            const auto n = samples->size();
            const auto i = std::min(static_cast<std::size_t>(t * static_cast<double>(n)), n - 1);
            return (*samples)[i];
          }};
}

double fro_sq_diff(const CMatrix& a, const CMatrix& b) { return frobenius_sq(a - b); }

}  // namespace

NamedProfile parse_profile(const std::string& spec) {
  if (spec == "linear") return {spec, [](double t) { return t; }};
  if (spec == "square") return {spec, [](double t) { return t * t; }};
  if (spec.rfind("const:", 0) == 0) {
    const double v = parse_number(spec.substr(6), "const profile");
    if (v < 0.0 || v > 1.0) throw FormatError("const profile value must lie in [0,1]");
    return {spec, [v](double) { return v; }};
  }
  if (spec.rfind("step:", 0) == 0) {
    const double t0 = parse_number(spec.substr(5), "step profile");
    if (t0 < 0.0 || t0 > 1.0) throw FormatError("step profile threshold must lie in [0,1]");
    return {spec, [t0](double t) { return t >= t0 ? 1.0 : 0.0; }};
  }
  return profile_from_file(spec);
}

DyadicStep discretize(const Profile& g, int k, int max_level) {
  if (k < 0) throw std::invalid_argument("discretize: level must be >= 0");
  require_level(k, max_level, "discretize");
  const std::size_t n = Level{k}.dim();
  const double cell = 1.0 / static_cast<double>(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int q = 0; q < kQuadraturePoints; ++q) {
      const double t = (static_cast<double>(i) + (q + 0.5) / kQuadraturePoints) * cell;
      const double y = g(t);
      if (!std::isfinite(y) || y < 0.0 || y > 1.0) {
        throw std::domain_error("discretize: profile value " + format_double(y) + " at t=" +
                                format_double(t) + " is outside [0,1]");
      }
      acc += y;
    }
    v[i] = acc / kQuadraturePoints;
  }

  const double raw_mass = std::accumulate(v.begin(), v.end(), 0.0);
  const double mass = std::round(raw_mass);
  const double shift = (mass - raw_mass) * cell;
  for (double& x : v) x = std::clamp(x + shift, 0.0, 1.0);

  const double deficit = mass - std::accumulate(v.begin(), v.end(), 0.0);
  if (deficit != 0.0) {
    // Room left in the direction of the correction, per entry.
    std::vector<double> room(n);
    for (std::size_t i = 0; i < n; ++i) room[i] = deficit > 0.0 ? 1.0 - v[i] : v[i];
    const double total_room = std::accumulate(room.begin(), room.end(), 0.0);
    if (total_room < std::abs(deficit) - 1e-12 || total_room <= 0.0) {
      throw InfeasibleTarget("discretize: cannot place mass " + format_double(mass) +
                             " at level " + std::to_string(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = std::clamp(v[i] + deficit * room[i] / total_room, 0.0, 1.0);
    }
  }
  const double final_mass = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(final_mass - mass) > 1e-12) {
    throw InfeasibleTarget("discretize: mass correction missed the integer " +
                           format_double(mass) + " by " + format_double(final_mass - mass));
  }
  return DyadicStep{k, std::move(v), static_cast<int>(mass)};
}

const char* to_string(Heuristic h) { return h == Heuristic::fresh ? "fresh" : "phase_align"; }

Heuristic parse_heuristic(const std::string& name) {
  if (name == "fresh") return Heuristic::fresh;
  if (name == "phase_align" || name == "phase-align") return Heuristic::phase_align;
  throw std::invalid_argument("unknown heuristic '" + name + "' (fresh|phase_align)");
}

ProjectionChain ProjectionChain::from_matrices(std::vector<CMatrix> mats) {
  ProjectionChain chain;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    ChainLink link;
    link.k = level_of(mats[i]).k;
    if (i > 0 && link.k != chain.links.back().k + 1) {
      throw std::invalid_argument("chain levels must increase by one");
    }
    for (std::size_t p = 0; p < mats[i].dim(); ++p) link.mass += mats[i](p, p).real();
    if (i > 0) link.fro_sq_to_embed_prev = fro_sq_diff(mats[i], embed(chain.links.back().a, std::numeric_limits<int>::max()));
    link.a = std::move(mats[i]);
    chain.links.push_back(std::move(link));
  }
  for (std::size_t i = 1; i + 1 < chain.links.size(); ++i) {
    const double den = *chain.links[i].fro_sq_to_embed_prev;
    if (den != 0.0) chain.links[i].ratio = 0.5 * *chain.links[i + 1].fro_sq_to_embed_prev / den;
  }
  return chain;
}

CMatrix phase_align(const CMatrix& a, const CMatrix& target, PhaseAlignStats* stats) {
  if (a.dim() != target.dim()) throw std::invalid_argument("phase_align: dimension mismatch");
  const std::size_t n = a.dim();
  std::vector<Complex> e(n, Complex(1.0, 0.0));

  auto objective = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Complex x = p == q ? a(p, q) : e[p] * std::conj(e[q]) * a(p, q);
        s += std::norm(x - target(p, q));
      }
    return s;
  };

  const double initial = objective();
  double current = initial;
  int sweeps = 0;
  while (sweeps < kMaxSweeps) {
    ++sweeps;
    for (std::size_t p = 0; p < n; ++p) {
      // Terms with theta_p read const - 2 Re(e_p z); the minimizer is e_p = conj(z)/|z|.
      Complex z(0.0, 0.0);
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p) continue;
        z += std::conj(e[q]) *
             (a(p, q) * std::conj(target(p, q)) + std::conj(a(q, p)) * target(q, p));
      }
      const double mag = std::abs(z);
      if (mag > 0.0) e[p] = std::conj(z) / mag;
    }
    const double next = objective();
    const double gain = current - next;
    current = next;
    if (gain < kSweepImprovement) break;
  }

  CMatrix out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      out(p, q) = p == q ? a(p, q) : e[p] * std::conj(e[q]) * a(p, q);
  if (current > initial) {
    out = a;
    current = initial;
  }
  if (stats != nullptr) *stats = PhaseAlignStats{initial, current, sweeps};
  return out;
}

ProjectionChain synthesize_chain(const Profile& g, int k_min, int k_max, Heuristic heuristic,
                                 int max_level) {
  if (k_min < 1) throw std::invalid_argument("synthesize_chain: k_min must be >= 1");
  if (k_max < k_min) throw std::invalid_argument("synthesize_chain: k_max < k_min");
  require_level(k_max, max_level, "synthesize_chain");
  std::vector<CMatrix> mats;
  for (int k = k_min; k <= k_max; ++k) {
    const DyadicStep step = discretize(g, k, max_level);
    CMatrix p = to_complex(horn_projection(DiagonalTarget::make(step.values)).p);
    if (heuristic == Heuristic::phase_align && !mats.empty()) {
      p = phase_align(p, embed(mats.back(), max_level));
    }
    mats.push_back(std::move(p));
  }
  return ProjectionChain::from_matrices(std::move(mats));
}

RatioReport ratio_report(const ProjectionChain& chain) {
  if (chain.links.size() < 3) throw std::invalid_argument("ratio_report: chain needs >= 3 levels");
  RatioReport r;
  std::vector<double> defined;
  for (std::size_t i = 1; i + 1 < chain.links.size(); ++i) {
    r.levels.push_back(chain.links[i].k);
    r.ratios.push_back(chain.links[i].ratio);
    if (chain.links[i].ratio) defined.push_back(*chain.links[i].ratio);
  }
  if (!defined.empty()) {
    const std::size_t tail = (defined.size() + 1) / 2;
    r.limsup_estimate = *std::max_element(defined.end() - static_cast<std::ptrdiff_t>(tail),
                                          defined.end());
  }
  return r;
}

std::string chain_to_csv(const ProjectionChain& chain) {
  std::ostringstream os;
  os << "k,mass,fro_dist_to_embed_prev,r_k\n";
  for (const auto& l : chain.links) {
    os << l.k << ',' << format_double(l.mass) << ',' << format_optional(l.fro_sq_to_embed_prev)
       << ',' << format_optional(l.ratio) << '\n';
  }
  return os.str();
}

std::string chain_to_json(const ProjectionChain& chain, const std::string& profile,
                          const std::string& heuristic) {
  using nlohmann::ordered_json;
  auto opt = [](const std::optional<double>& x) {
    return x ? ordered_json(*x) : ordered_json(nullptr);
  };
  ordered_json j;
  j["profile"] = profile;
  j["heuristic"] = heuristic;
  j["links"] = ordered_json::array();
  for (const auto& l : chain.links) {
    ordered_json row;
    row["k"] = l.k;
    row["mass"] = l.mass;
    row["fro_dist_to_embed_prev"] = opt(l.fro_sq_to_embed_prev);
    row["r_k"] = opt(l.ratio);
    j["links"].push_back(std::move(row));
  }
  j["limsup_estimate"] =
      chain.links.size() >= 3 ? opt(ratio_report(chain).limsup_estimate) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace carpenter
