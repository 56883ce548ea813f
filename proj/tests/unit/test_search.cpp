#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sts/constructions.hpp"
#include "sts/error.hpp"
#include "sts/random.hpp"
#include "sts/search.hpp"

using namespace sts;

namespace {

std::vector<TripleSystem> small_partial_systems(int count, int n, int m) {
  std::vector<TripleSystem> out;
  for (int i = 0; i < count; ++i) {
    const ProcessOutcome r = triangle_removal(n, m, 100 + i);
    out.push_back(r.system.to_system());
  }
  return out;
}

std::vector<TripleSystem> oracle_corpus() {
  std::vector<TripleSystem> out = {fano().system(), s9().system(), skolem(13).system()};
  for (auto& s : small_partial_systems(6, 10, 8)) out.push_back(s);
  for (auto& s : small_partial_systems(4, 12, 14)) out.push_back(s);
  out.push_back(build_system(5, {}));
  out.push_back(build_system(3, {{0, 1, 2}}));
  return out;
}

}  // namespace

TEST(Independence, MatchesSubsetEnumeration) {
  std::vector<TripleSystem> corpus = oracle_corpus();
  corpus.push_back(bose(15).system());
  for (const TripleSystem& s : corpus) {
    const ParamResult r = independence_number(s);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, oracle::independence_number(s)) << "n=" << s.n();
    const auto& set = std::get<std::vector<int>>(r.certificate);
    EXPECT_EQ(static_cast<int>(set.size()), r.value);
    EXPECT_TRUE(oracle::independent(s, set));
  }
}

TEST(Independence, LargeSystemsFallBackToGreedy) {
  const SteinerSystem s = bose(135);
  const ParamResult r = independence_number(s);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(oracle::independent(s, std::get<std::vector<int>>(r.certificate)));
}

TEST(AlphaStar, ThreePartiteMatchesAssignmentEnumeration) {
  for (const TripleSystem& s : oracle_corpus()) {
    const ParamResult r = alpha_star(s, 3);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, oracle::alpha_star(s, 3)) << "n=" << s.n();
    const auto& h = std::get<HoleCertificate>(r.certificate);
    EXPECT_EQ(h.a, r.value);
    EXPECT_TRUE(verify_hole(s, h));
  }
}

TEST(AlphaStar, TwoPartiteMatchesAssignmentEnumeration) {
  for (const TripleSystem& s : oracle_corpus()) {
    const ParamResult r = alpha_star(s, 2);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, oracle::alpha_star(s, 2)) << "n=" << s.n();
    EXPECT_TRUE(verify_hole(s, std::get<HoleCertificate>(r.certificate)));
  }
}

TEST(AlphaStar, KnownValues) {
  EXPECT_EQ(alpha_star(fano(), 3).value, 1);
  EXPECT_EQ(alpha_star(s9(), 3).value, 2);
}

TEST(AlphaStar, AdjacentSizeIsRefuted) {
  for (const SteinerSystem& s : {fano(), s9(), skolem(13), bose(15)}) {
    const ParamResult r = alpha_star(s, 3);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(find_hole(s, 3, r.value + 1).status, SearchStatus::kInfeasible);
    const HoleSearch found = find_hole(s, 3, r.value);
    ASSERT_EQ(found.status, SearchStatus::kFound);
    EXPECT_TRUE(verify_hole(s, *found.hole));
  }
}

TEST(AlphaStar, UpperBoundAndErrors) {
  EXPECT_EQ(alpha_star_upper_bound(s9(), 3), 2);
  EXPECT_EQ(alpha_star_upper_bound(bose(15), 3), 4);
  EXPECT_EQ(alpha_star_upper_bound(build_system(9, {}), 3), 3);
  EXPECT_EQ(alpha_star_upper_bound(s9(), 4), 2);
  EXPECT_THROW(alpha_star(s9(), 1), StsError);
}

TEST(AlphaStar, WitnessDoesNotDependOnWorkers) {
  for (const TripleSystem& s : small_partial_systems(4, 15, 20)) {
    SearchBudget one;
    SearchBudget four;
    four.parallelism = 4;
    for (int a = 1; a <= 5; ++a) {
      const HoleSearch x = find_hole(s, 3, a, one);
      const HoleSearch y = find_hole(s, 3, a, four);
      EXPECT_EQ(x.status, y.status);
      if (x.hole && y.hole) EXPECT_EQ(x.hole->parts, y.hole->parts);
    }
    EXPECT_EQ(alpha_star(s, 3, one).value, alpha_star(s, 3, four).value);
  }
}

TEST(AlphaStar, ExhaustedBudgetIsNotExact) {
  const TripleSystem s = triangle_removal(21, 20, 5).system.to_system();
  SearchBudget tiny;
  tiny.max_nodes = 10;
  const HoleSearch h = find_hole(s, 3, 7, tiny);
  EXPECT_EQ(h.status, SearchStatus::kBudgetExhausted);
}

TEST(Mc, MatchesColoringEnumeration) {
  std::vector<TripleSystem> corpus = {fano().system(), s9().system()};
  for (auto& s : small_partial_systems(5, 9, 7)) corpus.push_back(s);
  for (auto& s : small_partial_systems(3, 12, 10)) corpus.push_back(s);
  for (const TripleSystem& s : corpus) {
    for (int r : {2, 3}) {
      const ParamResult res = mc_exact(s, r);
      EXPECT_TRUE(res.exact);
      EXPECT_EQ(res.value, oracle::mc(s, r)) << "n=" << s.n() << " r=" << r;
      const auto& c = std::get<EdgeColoring>(res.certificate);
      EXPECT_EQ(oracle::largest_component(s, c.colors(), r), res.value);
    }
  }
}

TEST(Mc, PaperValuesAndRefutation) {
  EXPECT_EQ(mc_exact(fano(), 3).value, 6);
  EXPECT_EQ(mc_exact(s9(), 3).value, 7);
  for (const SteinerSystem& s : {fano(), s9(), skolem(13)}) {
    const ParamResult r = mc_exact(s, 3);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(find_coloring_below(s, 3, r.value).status, SearchStatus::kInfeasible);
    EXPECT_EQ(find_coloring_below(s, 3, r.value + 1).status, SearchStatus::kFound);
  }
}

TEST(Mc, HintsAndWorkersDoNotChangeTheAnswer) {
  const SteinerSystem s = skolem(13);
  const ParamResult plain = mc_exact(s, 3);
  const EdgeColoring hint(s, 3, std::vector<int>(s.size(), 0));
  SearchBudget four;
  four.parallelism = 4;
  const ParamResult hinted = mc_exact(s, 3, four, std::span<const EdgeColoring>(&hint, 1));
  EXPECT_EQ(plain.value, hinted.value);
  EXPECT_EQ(std::get<EdgeColoring>(plain.certificate).colors(),
            std::get<EdgeColoring>(hinted.certificate).colors());
}

TEST(Mc, BudgetExhaustionKeepsAnUpperBound) {
  const SteinerSystem s = bose(27);
  SearchBudget tiny;
  tiny.max_nodes = 200;
  const ParamResult r = mc_exact(s, 3, tiny);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(largest_mono_component(std::get<EdgeColoring>(r.certificate)).size, r.value);
}

TEST(Mc, EmptySystem) {
  const TripleSystem s = build_system(4, {});
  EXPECT_EQ(mc_exact(s, 3).value, 1);
}

TEST(Steiner, IsSteiner) {
  EXPECT_TRUE(is_steiner(fano()));
  EXPECT_FALSE(is_steiner(build_system(7, {{0, 1, 2}})));
}
