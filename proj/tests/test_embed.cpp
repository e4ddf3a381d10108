#include <gtest/gtest.h>

#include "biquad/embed.hpp"
#include "biquad/fields.hpp"
#include "oracles.hpp"

using namespace biquad;

TEST(Q8, Examples) {
  EXPECT_TRUE(admits_q8(2, 3));
  EXPECT_FALSE(admits_q8(3, 7));
  EXPECT_FALSE(admits_q8(-5, -1));
  EXPECT_TRUE(admits_q8(5, 29));
  EXPECT_TRUE(admits_q8_witt(2, 3));
  EXPECT_FALSE(admits_q8_witt(3, 5));
  EXPECT_FALSE(admits_q8_witt(-2, 3));
}

TEST(Q8, TypeThreeNeverAdmits) {
  for (i64 d1 = -199; d1 <= 199; d1 += 4) {
    for (i64 d2 = -199; d2 <= 199; d2 += 4) {
      if (d1 == d2 || !oracle::is_squarefree(d1) || !oracle::is_squarefree(d2)) continue;
      if (oracle::mod_pos(d1, 4) != 3) continue;
      ASSERT_FALSE(admits_q8(d1, d2)) << d1 << " " << d2;
    }
  }
}

TEST(D4, CyclicExamples) {
  EXPECT_TRUE(admits_d4_cyclic(3, -1, 2));
  EXPECT_FALSE(admits_d4_cyclic(3, 5, 1));
  EXPECT_FALSE(admits_d4_cyclic(-1, -3, 3));
  EXPECT_THROW(admits_d4_cyclic(3, 5, 4), std::invalid_argument);
}

TEST(D4, VerdictExamples) {
  EXPECT_EQ(admits_d4(3, 5), (D4Verdict{false, {false, false, false}}));
  const D4Verdict a = admits_d4(-1, 2);
  EXPECT_TRUE(a.overall);
  EXPECT_TRUE(a.cyclic_over[2]);
  const D4Verdict b = admits_d4(2, -2);
  EXPECT_TRUE(b.overall);
  EXPECT_TRUE(b.cyclic_over[1]);
}

TEST(D4, OverallIsUnionOfCases) {
  for (i64 d1 = -90; d1 <= 90; ++d1) {
    for (i64 d2 = -90; d2 <= 90; ++d2) {
      if (d1 == d2 || d1 == 0 || d2 == 0 || d1 == 1 || d2 == 1) continue;
      if (!oracle::is_squarefree(d1) || !oracle::is_squarefree(d2)) continue;
      const D4Verdict v = admits_d4(d1, d2);
      ASSERT_EQ(v.overall, v.cyclic_over[0] || v.cyclic_over[1] || v.cyclic_over[2]);
      for (int i = 1; i <= 3; ++i) ASSERT_EQ(v.cyclic_over[i - 1], admits_d4_cyclic_norm(d1, d2, i)) << d1 << " " << d2 << " " << i;
      ASSERT_EQ(admits_q8(d1, d2), admits_q8_witt(d1, d2)) << d1 << " " << d2;
      // Q8 is a field-level property, cyclicity over M1 swaps with M2.
      ASSERT_EQ(admits_q8(d1, d2), admits_q8(d2, d1));
      ASSERT_EQ(admits_q8(d1, d2), admits_q8(d1, third_d(d1, d2)));
      ASSERT_EQ(v.overall, admits_d4(d1, third_d(d1, d2)).overall);
      const D4Verdict w = admits_d4(d2, d1);
      ASSERT_EQ(v.cyclic_over[0], w.cyclic_over[1]);
      ASSERT_EQ(v.cyclic_over[2], w.cyclic_over[2]);
    }
  }
}

TEST(C4, Examples) {
  EXPECT_TRUE(admits_c4(5));
  EXPECT_TRUE(admits_c4(65));
  EXPECT_FALSE(admits_c4(3));
  EXPECT_FALSE(admits_c4(-5));
}

TEST(C4, MatchesSumOfTwoSquares) {
  for (i64 d = 2; d <= 5000; ++d) {
    if (!oracle::is_squarefree(d)) continue;
    ASSERT_EQ(admits_c4(d), oracle::sum_of_two_squares(d)) << d;
  }
}
