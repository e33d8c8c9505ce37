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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "carpenter/carpenter_synth.hpp"
#include "carpenter/errors.hpp"
#include "carpenter/exact_checks.hpp"
#include "carpenter/kadison_flow.hpp"
#include "carpenter/random.hpp"
#include "carpenter/strategy.hpp"

namespace carpenter {
namespace {

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << i;
}

TEST(Discretize, LinearProfile) {
  const auto s = discretize(parse_profile("linear").g, 2);
  expect_values(s.values, {0.125, 0.375, 0.625, 0.875}, 1e-15);
  EXPECT_EQ(s.mass, 2);
  EXPECT_EQ(s.k, 2);
}

TEST(Discretize, SquareProfileShiftsToIntegerMass) {
  const auto s = discretize(parse_profile("square").g, 1);
  expect_values(s.values, {0.25, 0.75}, 1e-14);
  EXPECT_EQ(s.mass, 1);
}

TEST(Discretize, ConstantProfile) {
  const auto s = discretize(parse_profile("const:0.5").g, 3);
  expect_values(s.values, std::vector<double>(8, 0.5), 0.0);
  EXPECT_EQ(s.mass, 4);
}

TEST(Discretize, ClampedExcessIsRedistributed) {
  // Step profile near the top: the uniform shift would push ones above 1.
  const auto s = discretize(parse_profile("step:0.3").g, 2);
  double total = 0.0;
  for (double v : s.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    total += v;
  }
  EXPECT_NEAR(total, s.mass, 1e-12);
  EXPECT_TRUE(majorization_feasible(s.values));
}

TEST(Discretize, RandomProfilesAlwaysFeasible) {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const double a = rng.uniform01();
    const double b = rng.uniform01();
    const Profile g = [a, b](double x) { return std::clamp(a + b * std::sin(7.0 * x), 0.0, 1.0); };
    for (int k = 0; k <= 6; ++k) {
      const auto s = discretize(g, k);
      EXPECT_TRUE(majorization_feasible(s.values));
    }
  }
}

TEST(Discretize, RejectsOutOfRangeProfile) {
  EXPECT_THROW(discretize([](double) { return 1.5; }, 2), std::domain_error);
  EXPECT_THROW(discretize([](double) { return std::nan(""); }, 2), std::domain_error);
  EXPECT_THROW(discretize(parse_profile("linear").g, 12), LevelOverflow);
  EXPECT_THROW(discretize(parse_profile("linear").g, -1), std::invalid_argument);
}

TEST(ParseProfile, Names) {
  EXPECT_DOUBLE_EQ(parse_profile("linear").g(0.3), 0.3);
  EXPECT_DOUBLE_EQ(parse_profile("square").g(0.5), 0.25);
  EXPECT_DOUBLE_EQ(parse_profile("const:0.2").g(0.9), 0.2);
  EXPECT_DOUBLE_EQ(parse_profile("step:0.5").g(0.49), 0.0);
  EXPECT_DOUBLE_EQ(parse_profile("step:0.5").g(0.5), 1.0);
  EXPECT_THROW(parse_profile("const:2"), FormatError);
  EXPECT_THROW(parse_profile("const:abc"), FormatError);
  EXPECT_THROW(parse_profile("no/such/profile.txt"), FormatError);
}

TEST(ParseProfile, SampleFile) {
  const std::string path = testing::TempDir() + "profile_samples.txt";
  {
    std::ofstream out(path);
    out << "# four cells\n0\n0.5\n\n1\n0.5\n";
  }
  const auto p = parse_profile(path);
  EXPECT_DOUBLE_EQ(p.g(0.1), 0.0);
  EXPECT_DOUBLE_EQ(p.g(0.3), 0.5);
  EXPECT_DOUBLE_EQ(p.g(0.6), 1.0);
  EXPECT_DOUBLE_EQ(p.g(1.0), 0.5);
  {
    std::ofstream out(path);
    out << "0\n0.5\n1\n";
  }
  EXPECT_THROW(parse_profile(path), FormatError);
  std::remove(path.c_str());
}

TEST(Heuristic, Parse) {
  EXPECT_EQ(parse_heuristic("fresh"), Heuristic::fresh);
  EXPECT_EQ(parse_heuristic("phase_align"), Heuristic::phase_align);
  EXPECT_STREQ(to_string(Heuristic::phase_align), "phase_align");
  EXPECT_THROW(parse_heuristic("greedy"), std::invalid_argument);
}

TEST(PhaseAlign, SignFlipExample) {
  const CMatrix a(2, {0.5, -0.5, -0.5, 0.5});
  const CMatrix t(2, {0.5, 0.5, 0.5, 0.5});
  EXPECT_DOUBLE_EQ(factor_dist_sq(a, t), 1.0);
  PhaseAlignStats stats;
  const CMatrix b = phase_align(a, t, &stats);
  EXPECT_NEAR(factor_dist_sq(b, t), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(stats.initial, 2.0);
  EXPECT_NEAR(stats.final, 0.0, 1e-15);
}

TEST(PhaseAlign, NeverIncreasesAndKeepsDiagonal) {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = random_projection(Level{3}, rng);
    const CMatrix target = random_projection(Level{3}, rng);
    PhaseAlignStats stats;
    const CMatrix b = phase_align(a, target, &stats);
    EXPECT_LE(stats.final, stats.initial + 1e-12);
    EXPECT_NEAR(frobenius_sq(b - target), stats.final, 1e-10);
    EXPECT_LE(stats.sweeps, 50);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(b(i, i), a(i, i));
    EXPECT_TRUE(classify(b).projection);
  }
}

TEST(PhaseAlign, RejectsDimensionMismatch) {
  EXPECT_THROW(phase_align(CMatrix(2), CMatrix(4)), std::invalid_argument);
}

TEST(Chain, KadisonIteratesReproduceFlowRatios) {
  const CMatrix seed(2, {0.0, 0.0, 0.0, 1.0});
  const auto chain = ProjectionChain::from_matrices(iterates(seed, 7));
  const RunResult r = run(SeedSpec::from_matrix(seed), 7);
  ASSERT_EQ(chain.links.size(), 7u);
  for (std::size_t i = 1; i + 1 < chain.links.size(); ++i) {
    ASSERT_TRUE(chain.links[i].ratio.has_value());
    ASSERT_TRUE(r.trace.steps[i - 1].ratio.has_value());
    EXPECT_NEAR(*chain.links[i].ratio, *r.trace.steps[i - 1].ratio, 1e-12);
  }
  EXPECT_NEAR(*chain.links[1].ratio, kLambda, 1e-12);
  const auto rep = ratio_report(chain);
  ASSERT_TRUE(rep.limsup_estimate.has_value());
  EXPECT_LE(*rep.limsup_estimate, kLambda + 1e-9);
}

TEST(Chain, EmbedTailGivesZeroThenUndefined) {
  const CMatrix a1(2, {0.0, 0.0, 0.0, 1.0});
  const CMatrix a2 = to_complex(horn_projection(DiagonalTarget::make({0.5, 0.5, 0.5, 0.5})).p);
  const CMatrix a3 = embed(a2);
  const CMatrix a4 = embed(a3);
  const auto chain = ProjectionChain::from_matrices({a1, a2, a3, a4});
  EXPECT_FALSE(chain.links[0].fro_sq_to_embed_prev.has_value());
  EXPECT_EQ(*chain.links[2].fro_sq_to_embed_prev, 0.0);
  ASSERT_TRUE(chain.links[1].ratio.has_value());
  EXPECT_EQ(*chain.links[1].ratio, 0.0);
  EXPECT_FALSE(chain.links[2].ratio.has_value());
  EXPECT_FALSE(chain.links[3].ratio.has_value());
  const auto rep = ratio_report(chain);
  EXPECT_EQ(rep.levels, (std::vector<int>{2, 3}));
  EXPECT_EQ(*rep.limsup_estimate, 0.0);
}

TEST(Chain, RejectsLevelGaps) {
  EXPECT_THROW(ProjectionChain::from_matrices({CMatrix(2), CMatrix(8)}), std::invalid_argument);
  EXPECT_THROW(ratio_report(ProjectionChain::from_matrices({CMatrix(2), CMatrix(4)})),
               std::invalid_argument);
}

class SynthesizedChain : public testing::TestWithParam<Heuristic> {};

TEST_P(SynthesizedChain, LinksAreProjectionsWithDiscretizedDiagonal) {
  const auto profile = parse_profile("linear");
  const auto chain = synthesize_chain(profile.g, 1, 6, GetParam());
  ASSERT_EQ(chain.links.size(), 6u);
  for (const auto& l : chain.links) {
    const auto step = discretize(profile.g, l.k);
    const auto rep = verify_projection(l.a, step.values, {}, l.k <= 5);
    EXPECT_TRUE(rep.pass) << "k=" << l.k;
    EXPECT_NEAR(l.mass, step.mass, 1e-9);
  }
  const auto rep = ratio_report(chain);
  EXPECT_EQ(rep.levels.size(), 4u);
}

INSTANTIATE_TEST_SUITE_P(Heuristics, SynthesizedChain,
                         testing::Values(Heuristic::fresh, Heuristic::phase_align));

TEST(Chain, PhaseAlignDoesNotWorsenLinkDistances) {
  const auto profile = parse_profile("square");
  const auto fresh = synthesize_chain(profile.g, 1, 6, Heuristic::fresh);
  const auto aligned = synthesize_chain(profile.g, 1, 6, Heuristic::phase_align);
  // The first link is shared, so the second link is aligned against the same target.
  EXPECT_LE(*aligned.links[1].fro_sq_to_embed_prev, *fresh.links[1].fro_sq_to_embed_prev + 1e-12);
}

TEST(Chain, Serialization) {
  const auto profile = parse_profile("linear");
  const auto chain = synthesize_chain(profile.g, 1, 4, Heuristic::fresh);
  const std::string csv = chain_to_csv(chain);
  EXPECT_EQ(csv.rfind("k,mass,fro_dist_to_embed_prev,r_k\n1,1,,\n", 0), 0u);
  const std::string json = chain_to_json(chain, profile.name, to_string(Heuristic::fresh));
  EXPECT_EQ(json.rfind("{\n  \"profile\": \"linear\",\n  \"heuristic\": \"fresh\",", 0), 0u);
  EXPECT_NE(json.find("\"limsup_estimate\""), std::string::npos);
  EXPECT_EQ(json, chain_to_json(synthesize_chain(profile.g, 1, 4, Heuristic::fresh), "linear",
                                "fresh"));
}

TEST(Chain, Arguments) {
  const auto g = parse_profile("linear").g;
  EXPECT_THROW(synthesize_chain(g, 0, 3, Heuristic::fresh), std::invalid_argument);
  EXPECT_THROW(synthesize_chain(g, 3, 2, Heuristic::fresh), std::invalid_argument);
  EXPECT_THROW(synthesize_chain(g, 1, 12, Heuristic::fresh), LevelOverflow);
}

}  // namespace
}  // namespace carpenter
