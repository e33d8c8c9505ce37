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

#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "carpenter/carpenter_synth.hpp"
#include "carpenter/dyadic.hpp"
#include "carpenter/errors.hpp"
#include "carpenter/exact_checks.hpp"
#include "carpenter/format.hpp"
#include "carpenter/kadison_flow.hpp"
#include "carpenter/matrix_io.hpp"
#include "carpenter/random.hpp"
#include "carpenter/strategy.hpp"

namespace carpenter::cli {
namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kSeedNames = {"diag01",       "identity", "rand-sa",
                                              "rand-proj",    "rand-general", "rand-diag"};

// A command-line problem that CLI11 cannot see, e.g. conflicting flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int k = 1;
  int max_level = kDefaultMaxLevel;
  std::string seed = "diag01";
  std::string out_path;
  std::string format = "json";
  std::uint64_t rng_seed = 1;
  double tol = 0.0;
};

std::string lambda_line() {
  return std::string("lambda = ") + kLambdaText + " = " + format_double(kLambda);
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

bool is_seed_name(const std::string& s) {
  return std::find(kSeedNames.begin(), kSeedNames.end(), s) != kSeedNames.end();
}

// A built-in name at level k, or a matrix file whose level must agree with an
// explicitly given --k.
CMatrix load_seed(const std::string& spec, int k, bool k_given, Rng& rng) {
  if (is_seed_name(spec)) return named_seed(spec, Level{k}, rng);
  CMatrix a = read_matrix_file(spec);
  const Level lv = level_of_dim(a.dim());
  if (k_given && lv.k != k) {
    throw UsageError("--k " + std::to_string(k) + " disagrees with level " +
                     std::to_string(lv.k) + " of " + spec);
  }
  return a;
}

std::vector<double> real_diagonal_of(const CMatrix& a, const std::string& what) {
  std::vector<double> d;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j && a(i, j) != Complex(0.0)) {
        throw UsageError(what + " must be a diagonal matrix");
      }
    }
  for (const Complex& z : diag_compress(a)) {
    if (z.imag() != 0.0) throw UsageError(what + " must have a real diagonal");
    d.push_back(z.real());
  }
  return d;
}

void require_format(const std::string& f) {
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
}

ordered_json opt_json(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- iterate

int run_iterate(const Common& c, bool k_given, std::ostream& out, std::ostream& err) {
  require_format(c.format);
  Rng rng(c.rng_seed);
  const SeedSpec seed = SeedSpec::from_matrix(load_seed(c.seed, c.k, k_given, rng));
  const RunResult r = run(seed, c.max_level, c.tol);
  emit(c.format == "json" ? trace_to_json(r.trace) : trace_to_csv(r.trace), c.out_path, out);

  const ToleranceConfig cfg;
  std::optional<double> max_ratio;
  for (const auto& s : r.trace.steps)
    if (s.ratio) max_ratio = std::max(max_ratio.value_or(*s.ratio), *s.ratio);
  const bool pass = !max_ratio || *max_ratio <= kLambda + cfg.ratio_slack;
  err << lambda_line() << '\n'
      << "steps = " << r.trace.steps.size() << ", final level = " << level_of(r.final_matrix).k
      << (r.trace.truncated ? " (level cap)" : "") << '\n'
      << "max ratio = " << (max_ratio ? format_double(*max_ratio) : "undefined")
      << " (bound lambda + " << format_double(cfg.ratio_slack) << ")\n"
      << verdict(pass) << '\n';
  return pass ? kExitOk : kExitFail;
}

// ----------------------------------------------------------- predict-diag

int run_predict_diag(const Common& c, bool k_given, int n_max, std::ostream& out,
                     std::ostream& err) {
  require_format(c.format);
  if (n_max < 1) throw UsageError("--n must be >= 1");
  Rng rng(c.rng_seed);
  const CMatrix seed = load_seed(c.seed, c.k, k_given, rng);
  const int k = level_of(seed).k;
  if (k < 1) throw UsageError("seed level must be >= 1");
  const std::vector<double> d = real_diagonal_of(seed, "predict-diag seed");
  require_level(k + n_max - 1, c.max_level, "predict-diag");
  double max_gap = 0.0;
  for (std::size_t l = 0; l + 1 < d.size(); l += 2) max_gap = std::max(max_gap, std::abs(d[l + 1] - d[l]));

  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "n,level,max_abs_err,sup_dev,bound,even_exact,odd_structured\n";
  bool pass = true;
  CMatrix a = seed;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) a = step(a, c.max_level);
    const auto pred = predicted_diagonal(d, k, n, c.max_level);
    double err_max = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) err_max = std::max(err_max, std::abs(a(i, i) - pred[i]));
    const DiagDeviation dev = diag_deviation(a, d, k, n);
    const double bound = std::ldexp(max_gap, -n);
    const bool ok = err_max <= c.tol && dev.even_exact && dev.odd_structured &&
                    dev.sup_err <= bound + 1e-10;
    pass = pass && ok;
    ordered_json row;
    row["n"] = n;
    row["level"] = k + n - 1;
    row["max_abs_err"] = err_max;
    row["sup_dev"] = dev.sup_err;
    row["bound"] = bound;
    row["even_exact"] = dev.even_exact;
    row["odd_structured"] = dev.odd_structured;
    rows.push_back(std::move(row));
    csv << n << ',' << k + n - 1 << ',' << format_double(err_max) << ','
        << format_double(dev.sup_err) << ',' << format_double(bound) << ','
        << (dev.even_exact ? "true" : "false") << ',' << (dev.odd_structured ? "true" : "false")
        << '\n';
  }
  ordered_json j;
  j["k"] = k;
  j["n_max"] = n_max;
  j["diag"] = d;
  j["tol"] = c.tol;
  j["rows"] = std::move(rows);
  j["pass"] = pass;
  emit(c.format == "json" ? dump(j) : csv.str(), c.out_path, out);
  err << "closed-form diagonal vs dense iteration, n = 1.." << n_max << ", tol "
      << format_double(c.tol) << '\n'
      << verdict(pass) << '\n';
  return pass ? kExitOk : kExitFail;
}

// ------------------------------------------------------------ contraction

int run_contraction(const Common& c, bool k_given, bool seed_given, int samples,
                    std::ostream& out, std::ostream& err) {
  require_format(c.format);
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const ToleranceConfig cfg;
  Rng rng(c.rng_seed);
  const std::vector<std::string> kinds = {"rand-general", "rand-sa", "rand-proj"};

  ordered_json seeds = ordered_json::array();
  std::ostringstream csv;
  csv << "seed,kind,n,level,delta,ratio\n";
  std::optional<double> overall;
  const int count = seed_given ? 1 : samples;
  for (int s = 0; s < count; ++s) {
    const std::string kind = seed_given ? c.seed : kinds[static_cast<std::size_t>(s) % kinds.size()];
    const SeedSpec seed = SeedSpec::from_matrix(load_seed(kind, c.k, k_given, rng));
    const RunResult r = run(seed, c.max_level, c.tol);
    std::optional<double> seed_max;
    ordered_json ratios = ordered_json::array();
    for (const auto& st : r.trace.steps) {
      ratios.push_back(opt_json(st.ratio));
      if (st.ratio) seed_max = std::max(seed_max.value_or(*st.ratio), *st.ratio);
      csv << s << ',' << kind << ',' << st.n << ',' << st.level << ','
          << format_double(st.delta) << ',' << format_optional(st.ratio) << '\n';
    }
    if (seed_max) overall = std::max(overall.value_or(*seed_max), *seed_max);
    ordered_json row;
    row["index"] = s;
    row["kind"] = kind;
    row["max_ratio"] = opt_json(seed_max);
    row["ratios"] = std::move(ratios);
    seeds.push_back(std::move(row));
  }
  const bool pass = !overall || *overall <= kLambda + cfg.ratio_slack;
  ordered_json j;
  j["lambda"] = kLambda;
  j["lambda_text"] = kLambdaText;
  j["k"] = c.k;
  j["max_level"] = c.max_level;
  j["seeds"] = std::move(seeds);
  j["max_ratio"] = opt_json(overall);
  j["pass"] = pass;
  emit(c.format == "json" ? dump(j) : csv.str(), c.out_path, out);
  err << lambda_line() << '\n'
      << "seeds = " << count << ", max ratio = "
      << (overall ? format_double(*overall) : "undefined") << '\n'
      << verdict(pass) << '\n';
  return pass ? kExitOk : kExitFail;
}

// --------------------------------------------------------------- distance

int run_distance(const Common& c, bool k_given, const std::string& seed_b, int n_max,
                 std::ostream& out, std::ostream& err) {
  require_format(c.format);
  Rng rng(c.rng_seed);
  const CMatrix a = load_seed(c.seed, c.k, k_given, rng);
  const int k = level_of(a).k;
  const CMatrix b = load_seed(seed_b, k, true, rng);
  if (k < 1) throw UsageError("seed level must be >= 1");
  if (n_max <= 0) n_max = c.max_level - k + 1;
  const DistanceScaling r = verify_distance_scaling(a, b, n_max, c.max_level, c.tol);

  ordered_json series = ordered_json::array();
  std::ostringstream csv;
  csv << "n,level,factor_dist_sq,rel_err\n";
  for (std::size_t i = 0; i < r.series.size(); ++i) {
    const double v = r.series[i];
    const double rel = r.expected == 0.0 ? std::abs(v) : std::abs(v - r.expected) / r.expected;
    ordered_json row;
    row["n"] = i + 1;
    row["level"] = k + static_cast<int>(i);
    row["factor_dist_sq"] = v;
    row["rel_err"] = rel;
    series.push_back(std::move(row));
    csv << i + 1 << ',' << k + static_cast<int>(i) << ',' << format_double(v) << ','
        << format_double(rel) << '\n';
  }
  ordered_json j;
  j["k"] = k;
  j["expected"] = r.expected;
  j["series"] = std::move(series);
  j["max_rel_err"] = r.max_rel_err;
  j["pass"] = r.ok;
  emit(c.format == "json" ? dump(j) : csv.str(), c.out_path, out);
  err << "expected 2^-k fro^2(B - A) = " << format_double(r.expected) << '\n'
      << "max relative error = " << format_double(r.max_rel_err) << " (tol "
      << format_double(c.tol) << ")\n"
      << verdict(r.ok) << '\n';
  return r.ok ? kExitOk : kExitFail;
}

// ------------------------------------------------------------ exact-check

int run_exact_check(const Common& c, int samples, std::ostream& out, std::ostream& err) {
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const ExactSuiteResult r = run_exact_suite(samples, c.rng_seed);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const ExactSample& s = r.samples[i];
    ordered_json row;
    row["index"] = i;
    row["eq5_lhs"] = s.eq5.lhs.to_string();
    row["eq5_rhs"] = s.eq5.rhs.to_string();
    row["eq5"] = s.eq5.holds();
    row["eq6_lhs"] = s.eq6.lhs.to_string();
    row["eq6_rhs"] = s.eq6.rhs.to_string();
    row["eq6"] = s.eq6.holds();
    row["ratio"] = s.ratio ? ordered_json(s.ratio->to_string()) : ordered_json(nullptr);
    row["ratio_le_lambda"] = s.ratio_within_lambda;
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["lambda"] = lambda_exact().to_string();
  j["lambda_below_one"] = r.lambda_below_one;
  j["samples"] = std::move(rows);
  j["identities_verified"] = r.identities_verified;
  j["pass"] = r.pass;
  emit(dump(j), c.out_path, out);
  err << lambda_line() << '\n'
      << verdict(r.pass) << ", " << r.identities_verified << " exact identities verified\n";
  return r.pass ? kExitOk : kExitFail;
}

// -------------------------------------------------------------- carpenter

int run_carpenter(const Common& c, const std::string& targets, std::size_t n,
                  const std::string& method, std::ostream& out, std::ostream& err) {
  if (method != "horn" && method != "blocks") throw UsageError("--method must be horn or blocks");
  std::vector<double> d;
  if (!targets.empty()) {
    d = read_targets_file(targets);
  } else {
    if (n == 0) throw UsageError("give --targets FILE or --n N");
    Rng rng(c.rng_seed);
    d = random_feasible_target(n, rng);
  }
  ToleranceConfig cfg;
  cfg.proj_tol = c.tol;
  cfg.validate();
  const DiagonalTarget target = DiagonalTarget::make(d);

  CMatrix p;
  int rotations = -1;
  if (method == "horn") {
    const HornResult h = horn_projection(target, cfg);
    p = to_complex(h.p);
    rotations = h.rotations;
  } else {
    p = discrete_carpenter(d.size(), blocks_from_target(d));
  }
  const ProjectionReport rep = verify_projection(p, d, cfg, d.size() <= 512);
  emit(matrix_to_string(p), c.out_path, out);
  err << "N = " << d.size() << ", rank = " << target.rank() << ", method = " << method;
  if (rotations >= 0) err << ", rotations = " << rotations;
  err << '\n'
      << "diag_err = " << format_double(rep.diag_err)
      << ", idempotence_err = " << format_double(rep.idempotence_err)
      << ", selfadjoint_err = " << format_double(rep.selfadjoint_err)
      << ", trace_err = " << format_double(rep.trace_err) << '\n';
  if (rep.eigen_checked) {
    err << "eigen_err = " << format_double(rep.eigen_err)
        << ", eigenvalues near 1 = " << rep.eigen_near_one << '\n';
  }
  err << verdict(rep.pass) << '\n';
  return rep.pass ? kExitOk : kExitFail;
}

// -------------------------------------------------------------- circulant

int run_circulant(const Common& c, std::size_t n, std::optional<std::size_t> m, bool inv_sqrt2,
                  std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("--n must be >= 1");
  if (inv_sqrt2 == m.has_value()) throw UsageError("give exactly one of --m and --inv-sqrt2");
  std::size_t rank = 0;
  if (inv_sqrt2) {
    if (!is_power_of_two(n)) throw UsageError("--inv-sqrt2 needs --n = 2^k");
    rank = static_cast<std::size_t>(std::llround(static_cast<double>(n) / std::sqrt(2.0)));
  } else {
    rank = *m;
  }
  const CMatrix p = circulant_projection(n, rank);
  const double alpha = static_cast<double>(rank) / static_cast<double>(n);
  double diag_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag_err = std::max(diag_err, std::abs(p(i, i) - alpha));
  const bool pass = diag_err <= 1e-13 && idempotence_defect(p) <= c.tol;
  emit(matrix_to_string(p), c.out_path, out);
  err << "N = " << n << ", m = " << rank << ", diagonal m/N = " << format_double(alpha) << '\n'
      << "max |P_ii - m/N| = " << format_double(diag_err)
      << ", idempotence_err = " << format_double(idempotence_defect(p)) << '\n';
  if (inv_sqrt2) {
    err << "1/sqrt(2) = " << format_double(1.0 / std::sqrt(2.0))
        << " has no finite realization; best m/2^k gap = "
        << format_double(std::abs(alpha - 1.0 / std::sqrt(2.0))) << '\n';
  }
  err << verdict(pass) << '\n';
  return pass ? kExitOk : kExitFail;
}

// --------------------------------------------------------------- strategy

int run_strategy(const Common& c, const std::string& g, int k_min, int k_max,
                 const std::string& heuristic, std::ostream& out, std::ostream& err) {
  require_format(c.format);
  const NamedProfile profile = parse_profile(g);
  const Heuristic h = parse_heuristic(heuristic);
  const ProjectionChain chain = synthesize_chain(profile.g, k_min, k_max, h, c.max_level);
  ToleranceConfig cfg;
  cfg.proj_tol = c.tol;
  int valid = 0;
  for (const auto& link : chain.links) {
    const DyadicStep s = discretize(profile.g, link.k, c.max_level);
    if (verify_projection(link.a, s.values, cfg).pass) ++valid;
  }
  const bool pass = valid == static_cast<int>(chain.links.size());
  emit(c.format == "json" ? chain_to_json(chain, profile.name, to_string(h)) : chain_to_csv(chain),
       c.out_path, out);
  err << lambda_line() << '\n'
      << "profile = " << profile.name << ", heuristic = " << to_string(h) << ", levels "
      << k_min << ".." << k_max << '\n';
  if (chain.links.size() >= 3) {
    const RatioReport rep = ratio_report(chain);
    err << "limsup estimate of r_k = " << format_optional(rep.limsup_estimate)
        << " (reference lambda; no target asserted)\n";
  }
  err << "valid projection links = " << valid << "/" << chain.links.size() << '\n'
      << verdict(pass) << '\n';
  return pass ? kExitOk : kExitFail;
}

void add_common(CLI::App* sub, Common& c, bool with_seed, bool with_format) {
  sub->add_option("--k", c.k, "Seed level k (dimension 2^k)")->check(CLI::Range(0, 16));
  sub->add_option("--max-level", c.max_level, "Level cap (default from CARPENTER_MAX_LEVEL or 11)")
      ->check(CLI::Range(1, 16));
  sub->add_option("--rng-seed", c.rng_seed, "Seed for random draws");
  sub->add_option("--out", c.out_path, "Output path (default stdout)");
  sub->add_option("--tol", c.tol, "Tolerance")->check(CLI::PositiveNumber);
  if (with_seed) {
    sub->add_option("--seed-matrix", c.seed,
                    "diag01|identity|rand-sa|rand-proj|rand-general|rand-diag or a matrix file");
  }
  if (with_format) sub->add_option("--format", c.format, "json|csv");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Dyadic Kadison-flow and Carpenter-projection experiments", "carpenter");
  app.require_subcommand(1);

  int env_max_level = kDefaultMaxLevel;
  try {
    env_max_level = max_level_from_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Common c;
  c.max_level = env_max_level;
  int n_max = 0;
  int samples = 50;
  std::string seed_b = "rand-general";
  std::string targets;
  std::size_t n = 0;
  std::size_t m = 0;
  bool inv_sqrt2 = false;
  std::string method = "horn";
  std::string g = "linear";
  int k_min = 1;
  int k_max = 6;
  std::string heuristic = "fresh";

  auto* iterate = app.add_subcommand("iterate", "Run the iteration and record delta_n and ratios");
  add_common(iterate, c, true, true);

  auto* predict = app.add_subcommand("predict-diag", "Closed-form diagonal against dense iteration");
  add_common(predict, c, true, true);
  predict->add_option("--n", n_max, "Largest iteration index n");

  auto* contraction = app.add_subcommand("contraction", "Ratio table over seeded random matrices");
  add_common(contraction, c, true, true);
  contraction->add_option("--samples", samples, "Number of random seeds");

  auto* distance = app.add_subcommand("distance", "Lockstep factor-norm distance series");
  add_common(distance, c, true, true);
  distance->add_option("--seed-matrix-b", seed_b, "Second seed (name or matrix file)");
  distance->add_option("--n", n_max, "Largest iteration index n (default: up to the level cap)");

  auto* exact = app.add_subcommand("exact-check", "Exact identities in Q(sqrt2)");
  exact->add_option("--samples", samples, "Number of random rational seeds");
  exact->add_option("--rng-seed", c.rng_seed, "Seed for random draws");
  exact->add_option("--out", c.out_path, "Output path (default stdout)");

  auto* carp = app.add_subcommand("carpenter", "Projection with a prescribed diagonal");
  carp->add_option("--targets", targets, "File with one diagonal value per line");
  carp->add_option("--n", n, "Size of a random feasible target");
  carp->add_option("--method", method, "horn|blocks");
  carp->add_option("--rng-seed", c.rng_seed, "Seed for the random target");
  carp->add_option("--out", c.out_path, "Matrix output path (default stdout)");
  carp->add_option("--tol", c.tol, "Idempotence tolerance")->check(CLI::PositiveNumber);

  auto* circ = app.add_subcommand("circulant", "Constant-diagonal circulant projection");
  circ->add_option("--n", n, "Matrix size N")->required();
  circ->add_option("--m", m, "Rank m");
  circ->add_flag("--inv-sqrt2", inv_sqrt2, "Use the best m/2^k approximation of 1/sqrt(2)");
  circ->add_option("--out", c.out_path, "Matrix output path (default stdout)");
  circ->add_option("--tol", c.tol, "Idempotence tolerance")->check(CLI::PositiveNumber);

  auto* strat = app.add_subcommand("strategy", "Projection chain and coherence ratios");
  strat->add_option("--g", g, "linear|square|const:<v>|step:<t0>|<sample file>");
  strat->add_option("--k-min", k_min, "First level");
  strat->add_option("--k-max", k_max, "Last level");
  strat->add_option("--heuristic", heuristic, "fresh|phase_align");
  strat->add_option("--max-level", c.max_level, "Level cap")->check(CLI::Range(1, 16));
  strat->add_option("--out", c.out_path, "Output path (default stdout)");
  strat->add_option("--format", c.format, "json|csv");
  strat->add_option("--tol", c.tol, "Idempotence tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto given = [](CLI::App* sub, const char* name) { return sub->get_option(name)->count() > 0; };
    if (*iterate) {
      if (!given(iterate, "--tol")) c.tol = 1e-12;
      return run_iterate(c, given(iterate, "--k"), out, err);
    }
    if (*predict) {
      if (!given(predict, "--tol")) c.tol = 1e-10;
      if (!given(predict, "--n")) n_max = 6;
      return run_predict_diag(c, given(predict, "--k"), n_max, out, err);
    }
    if (*contraction) {
      if (!given(contraction, "--tol")) c.tol = 1e-12;
      if (!given(contraction, "--samples")) samples = 20;
      return run_contraction(c, given(contraction, "--k"), given(contraction, "--seed-matrix"),
                             samples, out, err);
    }
    if (*distance) {
      if (!given(distance, "--tol")) c.tol = 1e-10;
      if (!given(distance, "--k")) c.k = 2;
      if (!given(distance, "--seed-matrix")) c.seed = "rand-general";
      return run_distance(c, given(distance, "--k"), seed_b, n_max, out, err);
    }
    if (*exact) return run_exact_check(c, samples, out, err);
    if (*carp) {
      if (!given(carp, "--tol")) c.tol = ToleranceConfig{}.proj_tol;
      return run_carpenter(c, targets, n, method, out, err);
    }
    if (*circ) {
      if (!given(circ, "--tol")) c.tol = 1e-12;
      return run_circulant(c, n, given(circ, "--m") ? std::optional<std::size_t>(m) : std::nullopt,
                           inv_sqrt2, out, err);
    }
    if (*strat) {
      if (!given(strat, "--tol")) c.tol = ToleranceConfig{}.proj_tol;
      return run_strategy(c, g, k_min, k_max, heuristic, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleTarget& e) {
    err << "error: infeasible target: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LevelOverflow& e) {
    err << "error: level cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: invalid value: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace carpenter::cli
