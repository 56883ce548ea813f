#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "sts/error.hpp"
#include "sts/random.hpp"
#include "sts/search.hpp"

using namespace sts;

TEST(TriangleRemoval, Basics) {
  const ProcessOutcome empty = triangle_removal(9, 0, 1);
  EXPECT_FALSE(empty.stuck);
  EXPECT_TRUE(empty.system.triples.empty());
  try {
    triangle_removal(7, 8, 1);
    FAIL();
  } catch (const StsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadM);
  }
  const ProcessOutcome a = triangle_removal(15, 20, 42);
  const ProcessOutcome b = triangle_removal(15, 20, 42);
  EXPECT_EQ(a.system.triples, b.system.triples);
}

TEST(TriangleRemoval, OutputsAndPrefixesAreLinear) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 7 + static_cast<int>(seed % 14);
    const ProcessOutcome r = triangle_removal(n, n * (n - 1) / 6, seed);
    const OrderedPartialSystem& s = r.system;
    for (std::size_t len = 0; len <= s.triples.size(); ++len) {
      EXPECT_TRUE(s.prefix(len).is_linear());
    }
    EXPECT_TRUE(s.to_system().is_linear());
  }
}

TEST(TriangleRemoval, CompleteFanoRuns) {
  int complete = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const ProcessOutcome r = triangle_removal(7, 7, seed);
    if (r.stuck) continue;
    ++complete;
    EXPECT_NO_THROW(validate_steiner(r.system.to_system()));
  }
  EXPECT_GT(complete, 0);
}

TEST(TriangleRemoval, FirstStepIsRoughlyUniform) {
  std::vector<int> counts(35, 0);
  auto index = [](const Triple& t) {
    return t.c * (t.c - 1) * (t.c - 2) / 6 + t.b * (t.b - 1) / 2 + t.a;
  };
  for (std::uint64_t seed = 0; seed < 7000; ++seed) {
    ++counts[index(triangle_removal(7, 1, seed).system.triples[0])];
  }
  for (int c : counts) {
    EXPECT_GT(c, 200 - 4 * 14);
    EXPECT_LT(c, 200 + 4 * 14);
  }
}

TEST(Binomial, Extremes) {
  EXPECT_EQ(binomial_3graph(10, 0.0, 1).size(), 0u);
  EXPECT_EQ(binomial_3graph(5, 1.0, 1).size(), 10u);
  EXPECT_THROW(binomial_3graph(5, 1.5, 1), StsError);
  EXPECT_THROW(binomial_3graph(5, -0.1, 1), StsError);
}

TEST(Binomial, MeanTripleCount) {
  const double p = 1.0 / 60;
  const double mean = 4060 * p;
  const double sd = std::sqrt(4060 * p * (1 - p) / 2000);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    total += static_cast<double>(binomial_3graph(30, p, seed).size());
  }
  EXPECT_NEAR(total / 2000, mean, 3 * sd);
}

TEST(Linearize, Examples) {
  EXPECT_TRUE(linearize(build_system(4, {{0, 1, 2}, {0, 1, 3}})).triples.empty());
  EXPECT_EQ(linearize(build_system(6, {{0, 1, 2}, {3, 4, 5}})).triples.size(), 2u);
  EXPECT_EQ(linearize(build_system(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}})).triples.size(), 3u);
}

TEST(Linearize, AlwaysLinear) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TripleSystem g = binomial_3graph(20, 1.0 / 40, seed);
    const OrderedPartialSystem l = linearize(g);
    EXPECT_TRUE(l.is_linear());
    // Kept triples are exactly those whose pairs are not shared.
    std::size_t expected = 0;
    for (const Triple& t : g.triples()) {
      expected += g.pair_degree(t.a, t.b) == 1 && g.pair_degree(t.a, t.c) == 1 &&
                  g.pair_degree(t.b, t.c) == 1;
    }
    EXPECT_EQ(l.triples.size(), expected);
  }
}

TEST(RandomSts, ValidAndDeterministic) {
  for (int n : {7, 9, 13, 15, 19, 21, 25}) {
    const SteinerSystem s = random_sts(n, 3);
    EXPECT_TRUE(oracle::every_pair_exactly_once(s));
    EXPECT_EQ(s.construction(), Construction::kRandom);
    EXPECT_EQ(random_sts(n, 3).system(), s.system());
  }
  EXPECT_THROW(random_sts(8, 1), StsError);
}

TEST(RandomSts, HoleNumberStaysUnderTheSteinerBound) {
  for (int n : {13, 15, 19}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SteinerSystem s = random_sts(n, seed);
      const ParamResult r = alpha_star(s, 3);
      EXPECT_LE(r.value, n / 3 - 1);
      EXPECT_TRUE(r.exact);
    }
  }
}

TEST(Experiment, RowsSummaryAndDeterminism) {
  ExperimentConfig cfg;
  cfg.n = 9;
  cfg.samples = 20;
  cfg.seed = 5;
  const std::vector<ExperimentRow> rows = experiment_discrepancy(cfg);
  ASSERT_EQ(rows.size(), 40u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].sample, static_cast<int>(i / 2));
    EXPECT_EQ(rows[i].model, i % 2 == 0 ? "triangle-removal" : "random-sts");
    if (rows[i].model == "random-sts") {
      EXPECT_EQ(rows[i].alpha_star3, 2);
      EXPECT_EQ(rows[i].m, 12);
    } else {
      EXPECT_EQ(rows[i].m, 6);
    }
  }
  std::ostringstream a;
  std::ostringstream b;
  write_experiment_csv(a, rows);
  cfg.jobs = 3;
  write_experiment_csv(b, experiment_discrepancy(cfg));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "seed,n,model,m_or_p,sample,alpha_star3,exact,nodes,seconds");

  const ExperimentSummary sum = summarize(rows, 9);
  EXPECT_EQ(sum.steiner_upper, 2);
  ASSERT_EQ(sum.models.size(), 2u);
  EXPECT_EQ(sum.models[1].max_alpha, 2);
  EXPECT_EQ(sum.models[1].rows, 20);
}

TEST(Experiment, RejectsInadmissibleOrders) {
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.samples = 1;
  EXPECT_THROW(experiment_discrepancy(cfg), StsError);
}
