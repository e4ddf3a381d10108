#include <gtest/gtest.h>

#include <random>

#include "biquad/charfn.hpp"
#include "biquad/embed.hpp"
#include "oracles.hpp"

using namespace biquad;

TEST(DTuple, Validation) {
  EXPECT_NO_THROW(DTuple(1, 1, 1, 1, 1, 1));
  EXPECT_THROW(DTuple(2, 1, 1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(DTuple(9, 1, 1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(DTuple(3, 1, 1, 15, 1, 1), std::invalid_argument);
  EXPECT_THROW(DTuple(-3, 1, 1, 1, 1, 1), std::invalid_argument);
  const DTuple t(3, 5, 7, 11, 13, 1);
  EXPECT_EQ(t.big(1), 15);
  EXPECT_EQ(t.big(3), 13);
  EXPECT_EQ(t.omega(), 5);
}

TEST(GOf, Examples) {
  EXPECT_EQ(g_of(DTuple(1, 1, 1, 1, 1, 1)), 1);
  EXPECT_EQ(g_of(DTuple(3, 1, 1, 5, 1, 1)), -1);
  EXPECT_EQ(g_of(DTuple(1, 5, 3, 1, 1, 1)), -1);
}

TEST(GOf, MatchesJacobiOracle) {
  std::mt19937_64 rng(3);
  std::vector<i64> odd_sf;
  for (i64 k = 1; k < 400; k += 2) {
    if (oracle::is_squarefree(k)) odd_sf.push_back(k);
  }
  int done = 0;
  while (done < 5000) {
    std::array<i64, 6> v{};
    for (auto& x : v) x = rng() % 3 == 0 ? odd_sf[rng() % odd_sf.size()] : 1;
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = 0; j < i && ok; ++j) ok = std::gcd(v[i], v[j]) == 1;
    if (!ok) continue;
    ++done;
    const DTuple t(v[0], v[1], v[2], v[3], v[4], v[5]);
    const int expect = oracle::jacobi(v[3] * v[5], v[0]) * oracle::jacobi(v[1] * v[5], v[2]) *
                       oracle::jacobi(v[1] * v[3], v[4]);
    ASSERT_EQ(g_of(t), expect);
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(1, 1, 1), 1);
  EXPECT_EQ(phi(3, 1, 1), -1);
  EXPECT_EQ(phi(3, 3, 3), 1);
  EXPECT_THROW(phi(2, 1, 1), std::invalid_argument);
}

TEST(Split, Examples) {
  EXPECT_EQ(split_q8(15, 35), (Split{3, 7, 5, false, 1, 1}));
  EXPECT_EQ(split_q8(6, 10), (Split{3, 5, 1, true, 1, 1}));
  EXPECT_EQ(split_q8(5, 29), (Split{5, 29, 1, false, 1, 1}));
  EXPECT_THROW(split_q8(-5, 29), std::invalid_argument);
  EXPECT_THROW(split_pair(2, 3), std::invalid_argument);
  EXPECT_EQ(split_pair(-6, 10), (Split{3, 5, 1, true, -1, 1}));
}

TEST(Indicators, Examples) {
  EXPECT_EQ(indicator_q8(AdmissibleTriple::from_pair(5, 29)), 1);
  EXPECT_EQ(indicator_q8(AdmissibleTriple::from_pair(3, 7)), 0);
  EXPECT_EQ(indicator_q8(AdmissibleTriple::from_pair(6, 10)), 0);
  EXPECT_EQ(indicator_m(3, -1, 2), 1);
  EXPECT_EQ(indicator_m(3, 5, 1), 0);
  EXPECT_EQ(indicator_m(-3, -7, 2), 1);
  EXPECT_EQ(indicator_d4(AdmissibleTriple::from_pair(3, 5)), 0);
  EXPECT_EQ(indicator_d4(AdmissibleTriple::from_pair(-3, -7)), 1);
  EXPECT_EQ(indicator_d4(AdmissibleTriple::from_pair(2, -2)), 1);
}

TEST(Indicators, AgreeWithLocalTables) {
  for (i64 d1 = -120; d1 <= 120; ++d1) {
    for (i64 d2 = -120; d2 <= 120; ++d2) {
      if (d1 == d2 || d1 == 0 || d2 == 0 || d1 == 1 || d2 == 1 || ((d1 ^ d2) & 1)) continue;
      if (!oracle::is_squarefree(d1) || !oracle::is_squarefree(d2)) continue;
      ASSERT_EQ(indicator_q8(d1, d2) == 1, admits_q8(d1, d2)) << d1 << " " << d2;
      const D4Verdict v = admits_d4(d1, d2);
      ASSERT_EQ(indicator_d4(d1, d2) == 1, v.overall) << d1 << " " << d2;
      for (int i = 1; i <= 3; ++i) ASSERT_EQ(indicator_m(d1, d2, i) == 1, v.cyclic_over[i - 1]) << d1 << " " << d2;
      // Products of case indicators from their psi forms.
      const std::array<unsigned, 4> masks{0b011, 0b101, 0b110, 0b111};
      for (unsigned mask : masks) {
        bool all = true;
        for (int i = 0; i < 3; ++i) {
          if (mask >> i & 1) all = all && v.cyclic_over[i];
        }
        ASSERT_EQ(indicator_m_product(d1, d2, mask) == 1, all) << d1 << " " << d2 << " mask " << mask;
      }
    }
  }
}

TEST(Indicators, RejectMixedParity) {
  EXPECT_THROW(indicator_q8(2, 3), std::invalid_argument);
  EXPECT_THROW(indicator_d4(-1, 2), std::invalid_argument);
}
