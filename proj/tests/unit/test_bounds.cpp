#include <gtest/gtest.h>

#include <cmath>

#include "sts/bounds.hpp"

using namespace sts;

TEST(ClosedForm, ValuesAtNine) {
  const ClosedFormBounds b = closed_form_bounds(9, 2);
  EXPECT_EQ(b.gyarfas, 7);
  EXPECT_EQ(b.alpha_upper, 2);
  EXPECT_EQ(b.hole_upper, 7);
  EXPECT_EQ(b.hole_lower, 5);
  EXPECT_NEAR(b.z2, 6.562, 5e-4);
  EXPECT_TRUE(b.z2_exceeds);
  EXPECT_FALSE(closed_form_bounds(9).hole_upper.has_value());
}

TEST(ClosedForm, GyarfasIsCeilingPlusOne) {
  for (int n = 3; n < 200; ++n) {
    EXPECT_EQ(closed_form_bounds(n).gyarfas,
              static_cast<int>(std::ceil(2.0 * n / 3.0)) + 1);
  }
}

TEST(ClosedForm, ExactComparisonAgreesWithFloatingPoint) {
  for (long long n = 1; n <= 20000; ++n) {
    const long double nn = static_cast<long double>(n);
    const long double z2 = nn / 2 + nn / 6 * std::sqrt(1 + 8 / nn);
    EXPECT_EQ(z2_exceeds_exact(n), z2 > (2 * nn + 1) / 3) << n;
  }
}

TEST(Cdr, FirstTerms) {
  const std::vector<CdrTerm> seq = cdr_sequence(1);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0].m, 24);
  EXPECT_EQ(seq[0].n, 33);
  EXPECT_EQ(seq[0].ratio, BigRational(24, 33));
  EXPECT_EQ(seq[1].m, 2160);
  EXPECT_EQ(seq[1].n, 2241);
}

TEST(Cdr, SequenceProperties) {
  const std::vector<CdrTerm> seq = cdr_sequence(12);
  ASSERT_EQ(seq.size(), 13u);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    EXPECT_LE(seq[k].m, seq[k].n);
    EXPECT_LE(seq[k].n, 2 * seq[k].m);
    if (k > 0) {
      EXPECT_GE(seq[k].ratio, seq[k - 1].ratio);
      EXPECT_LT(1 - seq[k].ratio, 1 - seq[k - 1].ratio);
      EXPECT_EQ(cdr_ratio_step(seq[k - 1].ratio), seq[k].ratio);
    }
  }
  EXPECT_GT(seq[12].ratio, BigRational(999, 1000));
}

TEST(Cdr, ProductFormula) {
  const auto base = cdr_product({1, 4, 4}, {1, 4, 4});
  EXPECT_EQ(base[0], 24);
  EXPECT_EQ(base[1], 24);
  EXPECT_EQ(base[2], 33);
  const std::vector<CdrTerm> seq = cdr_sequence(4);
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const auto& p = seq[k - 1];
    const auto next = cdr_product({p.m, p.m, p.n}, {p.m, p.m, p.n});
    EXPECT_EQ(next[0], seq[k].m);
    EXPECT_EQ(next[1], seq[k].m);
    EXPECT_EQ(next[2], seq[k].n);
  }
}
