#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "oracles.hpp"
#include "sts/colorings.hpp"
#include "sts/constructions.hpp"
#include "sts/decomposition.hpp"
#include "sts/error.hpp"
#include "sts/search.hpp"

using namespace sts;

namespace {

void expect_sound(const TripleSystem& s, const EdgeColoring& c) {
  const DecompositionResult d = decompose_3coloring(s, c);
  const DecompositionCheck check = verify_decomposition(s, c, d);
  EXPECT_TRUE(check.ok) << check.failed_clause;
}

}  // namespace

TEST(Decomposition, SingleColorIsL1) {
  const SteinerSystem f = fano();
  const EdgeColoring c(f, 3, std::vector<int>(7, 2));
  const DecompositionResult d = decompose_3coloring(f, c);
  EXPECT_EQ(d.kind, DecompositionCase::kL1);
  EXPECT_EQ(d.blue, 2);
  EXPECT_EQ(d.spanning.size(), 7u);
  EXPECT_TRUE(verify_decomposition(f, c, d).ok);
}

TEST(Decomposition, EveryColoringOfFano) {
  const SteinerSystem f = fano();
  std::vector<int> colors(7, 0);
  for (int code = 0; code < 2187; ++code) {
    int x = code;
    for (int& c : colors) {
      c = x % 3;
      x /= 3;
    }
    expect_sound(f, EdgeColoring(f, 3, colors));
  }
}

TEST(Decomposition, RandomColorings) {
  for (const SteinerSystem& s : {s9(), bose(15), skolem(13), bose(21)}) {
    int cases[3] = {0, 0, 0};
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const EdgeColoring c(s, 3, oracle::random_colors(s.size(), 3, seed));
      const DecompositionResult d = decompose_3coloring(s, c);
      ++cases[static_cast<int>(d.kind)];
      const DecompositionCheck check = verify_decomposition(s, c, d);
      EXPECT_TRUE(check.ok) << check.failed_clause;
    }
    EXPECT_GT(cases[0], 0);
  }
}

TEST(Decomposition, HoleColoringOfS9) {
  const SteinerSystem s = s9();
  const HoleCertificate h = std::get<HoleCertificate>(alpha_star(s, 3).certificate);
  expect_sound(s, hole_coloring(s, h));
}

TEST(Decomposition, OptimalColoringOfS9) {
  const SteinerSystem s = s9();
  const EdgeColoring c = std::get<EdgeColoring>(mc_exact(s, 3).certificate);
  expect_sound(s, c);
  EXPECT_GE(largest_mono_component(c).size, 9 - 2 * 2);
}

namespace {

// Eight points in parts {0,1} {2,3} {4,5} {6,7}; for each pair of parts p, q
// the triples {p0,p1,q0} and {p0,p1,q1}. Every pair is covered and no triple
// meets three parts.
struct FourParts {
  TripleSystem system;
  std::vector<int> colors;
};

FourParts four_parts() {
  // Colour of the pair of parts, following W X Y Z = parts 0 1 2 3.
  const int rule[4][4] = {{-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
  std::vector<Triple> triples;
  std::vector<int> colors;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (p == q) continue;
      for (int j = 0; j < 2; ++j) {
        triples.push_back(Triple::sorted(2 * p, 2 * p + 1, 2 * q + j));
        colors.push_back(rule[p][q]);
      }
    }
  }
  return {build_system(8, triples), colors};
}

}  // namespace

TEST(Decomposition, CraftedL2) {
  const FourParts fp = four_parts();
  const EdgeColoring c(fp.system, 3, fp.colors);
  const DecompositionResult d = decompose_3coloring(fp.system, c);
  ASSERT_EQ(d.kind, DecompositionCase::kL2);
  EXPECT_EQ(d.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(d.parts[1], (std::vector<int>{2, 3}));
  const DecompositionCheck check = verify_decomposition(fp.system, c, d);
  EXPECT_TRUE(check.ok) << check.failed_clause;
  EXPECT_TRUE(verify_t2_partition(fp.system, c, to_t2_partition(d)).ok);

  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const EdgeColoring r(fp.system, 3, oracle::random_colors(fp.system.size(), 3, seed));
    const DecompositionResult e = decompose_3coloring(fp.system, r);
    const DecompositionCheck ok = verify_decomposition(fp.system, r, e);
    EXPECT_TRUE(ok.ok) << ok.failed_clause;
  }
}

TEST(Decomposition, L2UnderColorPermutations) {
  const FourParts fp = four_parts();
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::vector<int> colors = fp.colors;
    for (int& c : colors) c = perm[c];
    const EdgeColoring c(fp.system, 3, colors);
    DecompositionResult d = decompose_3coloring(fp.system, c);
    ASSERT_EQ(d.kind, DecompositionCase::kL2);
    EXPECT_TRUE(verify_decomposition(fp.system, c, d).ok);
    const T2Partition t = to_t2_partition(d);
    EXPECT_TRUE(verify_t2_partition(fp.system, c, t).ok);
    for (int i = 0; i + 1 < 4; ++i) EXPECT_GE(t.parts[i].size(), t.parts[i + 1].size());

    // [W,X] is only blue and [W,Z] only green, so moving a vertex from X to
    // Z breaks a clause.
    d.parts[3].push_back(d.parts[1].back());
    d.parts[1].pop_back();
    std::sort(d.parts[3].begin(), d.parts[3].end());
    EXPECT_FALSE(verify_decomposition(fp.system, c, d).ok);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Decomposition, VerifierRejectsBrokenClaims) {
  const SteinerSystem s = s9();
  const EdgeColoring mono(s, 3, std::vector<int>(12, 0));
  DecompositionResult l1;
  l1.kind = DecompositionCase::kL1;
  l1.spanning = {0, 1, 2, 3};
  EXPECT_FALSE(verify_decomposition(s, mono, l1).ok);

  DecompositionResult l2;
  l2.kind = DecompositionCase::kL2;
  l2.parts = {std::vector<int>{}, {0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  const DecompositionCheck check = verify_decomposition(s, mono, l2);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.failed_clause.empty());
}

TEST(Decomposition, RequiresCoveredPairs) {
  const TripleSystem s = build_system(5, {{0, 1, 2}});
  try {
    decompose_3coloring(s, EdgeColoring(s, 3, {0}));
    FAIL();
  } catch (const StsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPairUncovered);
  }
}
