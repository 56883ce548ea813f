#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "sts/constructions.hpp"
#include "sts/error.hpp"
#include "sts/io.hpp"

using namespace sts;

TEST(Constructions, BoseAllOrdersUpTo99) {
  for (int n = 9; n <= 99; n += 6) {
    const SteinerSystem s = bose(n);
    const int k = (n - 3) / 6;
    EXPECT_EQ(static_cast<int>(s.size()), n * (n - 1) / 6);
    EXPECT_TRUE(oracle::every_pair_exactly_once(s));
    EXPECT_EQ(s.construction(), Construction::kBose);
    ASSERT_TRUE(s.labeled());
    EXPECT_EQ(std::count(s.labels().begin(), s.labels().end(), TripleType::kType1),
              2 * k + 1);
  }
}

TEST(Constructions, SkolemAllOrdersUpTo97) {
  for (int n = 7; n <= 97; n += 6) {
    const SteinerSystem s = skolem(n);
    const int k = (n - 1) / 6;
    EXPECT_EQ(static_cast<int>(s.size()), n * (n - 1) / 6);
    EXPECT_TRUE(oracle::every_pair_exactly_once(s));
    const auto& l = s.labels();
    EXPECT_EQ(std::count(l.begin(), l.end(), TripleType::kType1), k);
    EXPECT_EQ(std::count(l.begin(), l.end(), TripleType::kType2), 3 * k);
    // Every Type 2 triple contains infinity.
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(l[i] == TripleType::kType2, s.system().triple(i).a == skolem_infinity());
    }
  }
}

TEST(Constructions, LiteralSkolemInfinityTriplesFail) {
  for (int n : {13, 19, 25}) {
    EXPECT_THROW(validate_steiner(oracle::literal_skolem(n)), StsError) << n;
  }
}

TEST(Constructions, BoseWithRandomQuasigroups) {
  for (int n : {9, 15, 21, 27, 45}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const SteinerSystem s = bose(n, random_idempotent_quasigroup(n / 3, seed));
      EXPECT_TRUE(oracle::every_pair_exactly_once(s));
    }
  }
}

TEST(Constructions, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const StsError& e) {
      return e.code();
    }
    return ErrorCode::kParse;
  };
  EXPECT_EQ(code([] { bose(13); }), ErrorCode::kBadOrder);
  EXPECT_EQ(code([] { bose(3); }), ErrorCode::kBadOrder);
  EXPECT_EQ(code([] { skolem(9); }), ErrorCode::kBadOrder);
  EXPECT_EQ(code([] { bose(15, idempotent_quasigroup(7)); }), ErrorCode::kBadOrder);
  // Z_5 addition is commutative but not idempotent.
  std::vector<int> add(25);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) add[a * 5 + b] = (a + b) % 5;
  }
  EXPECT_EQ(code([&] { bose(15, Quasigroup(5, add)); }), ErrorCode::kNonIdempotentQuasigroup);
  EXPECT_EQ(code([] { skolem(13, Quasigroup(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0})); }),
            ErrorCode::kNonHalfIdempotentQuasigroup);
}

TEST(Constructions, SmallSystems) {
  EXPECT_TRUE(oracle::every_pair_exactly_once(fano()));
  EXPECT_TRUE(oracle::every_pair_exactly_once(s9()));
  EXPECT_EQ(s9().size(), 12u);
  // S9 has four parallel classes of three disjoint lines.
  const SteinerSystem s = s9();
  for (int cls = 0; cls < 4; ++cls) {
    std::vector<int> seen(9, 0);
    for (int j = 0; j < 3; ++j) {
      for (int v : s.system().triple(3 * cls + j).vertices()) ++seen[v];
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 9);
  }
}

TEST(Constructions, LabelsReDerivedFromEncoding) {
  for (const SteinerSystem& s : {bose(21), skolem(25)}) {
    const SteinerSystem again = attach_labels(s.system(), s.construction());
    EXPECT_EQ(again.labels(), s.labels());
  }
  try {
    attach_labels(fano().system(), Construction::kSkolem);
    FAIL();
  } catch (const StsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingLabels);
  }
  EXPECT_FALSE(attach_labels(s9().system(), Construction::kS9).labeled());
}
