#include <gtest/gtest.h>

#include <map>

#include "biquad/fields.hpp"
#include "oracles.hpp"

using namespace biquad;

namespace {

using Triple = std::array<i64, 3>;

int s_index(Signature s) { return s == Signature::TotallyReal ? 0 : 1; }

}  // namespace

TEST(ThirdD, Examples) {
  EXPECT_EQ(third_d(2, 6), 3);
  EXPECT_EQ(third_d(5, 13), 65);
  EXPECT_EQ(third_d(-1, 2), -2);
  EXPECT_THROW(third_d(3, 3), std::invalid_argument);
  EXPECT_THROW(third_d(1, 3), std::invalid_argument);
}

TEST(Triple, TypeAndDiscriminant) {
  const auto a = AdmissibleTriple::from_pair(5, 13);
  EXPECT_EQ(a.type(), 1);
  EXPECT_EQ(to_string_u128(a.discriminant()), "4225");
  const auto b = AdmissibleTriple::from_pair(2, 6);
  EXPECT_EQ(b.type(), 4);
  EXPECT_EQ(b.d3(), 3);
  EXPECT_EQ(to_string_u128(b.discriminant()), "2304");
  const auto c = AdmissibleTriple::from_pair(5, -1);
  EXPECT_EQ(c.type(), 3);
  EXPECT_EQ(to_string_u128(c.discriminant()), "400");
  EXPECT_EQ(c.signature(), Signature::TotallyComplex);
}

TEST(Triple, Validation) {
  EXPECT_THROW(AdmissibleTriple::from_pair(4, 5), std::invalid_argument);
  EXPECT_THROW(AdmissibleTriple::from_pair(5, 5), std::invalid_argument);
  EXPECT_THROW(AdmissibleTriple::from_pair(1, 5), std::invalid_argument);
  EXPECT_THROW(AdmissibleTriple::from_pair(0, 5), std::invalid_argument);
}

TEST(Triple, DiscriminantIsProductOfQuadraticDiscriminants) {
  for (i64 d1 = -80; d1 <= 80; ++d1) {
    for (i64 d2 = -80; d2 <= 80; ++d2) {
      if (d1 == d2 || d1 == 0 || d2 == 0 || d1 == 1 || d2 == 1) continue;
      if (!oracle::is_squarefree(d1) || !oracle::is_squarefree(d2)) continue;
      const auto t = AdmissibleTriple::from_pair(d1, d2);
      const i64 expected = std::llabs(oracle::fundamental(t.d1()) * oracle::fundamental(t.d2()) *
                                      oracle::fundamental(t.d3()));
      ASSERT_EQ(static_cast<i64>(t.discriminant()), expected) << d1 << " " << d2;
      ASSERT_EQ(sign_of(t.d3()), sign_of(d1) * sign_of(d2));
      ASSERT_EQ(canonicalize(d1, d2), canonicalize(d2, d1));
      ASSERT_EQ(canonicalize(d1, d2), canonicalize(t.d1(), t.d3()));
      ASSERT_EQ(canonicalize(d1, d2).type(), t.type());
    }
  }
}

TEST(Triple, HugeDiscriminantDoesNotOverflow) {
  const i64 big = (i64{1} << 61) - 1;  // prime
  const auto t = AdmissibleTriple::from_pair(big, -2);
  // 256 (2^61 - 1)^2 exceeds 128 bits.
  EXPECT_EQ(t.discriminant_decimal(), "1361129467683753852672906809009661542656");
  EXPECT_THROW(t.discriminant(), std::overflow_error);
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonicalize(3, 2).values(), (Triple{2, 6, 3}));
  EXPECT_EQ(canonicalize(65, 5).values(), (Triple{5, 13, 65}));
  EXPECT_EQ(canonicalize(-2, 2).values(), (Triple{-2, 2, -1}));
}

TEST(Enumerate, SmallBounds) {
  EXPECT_TRUE(enumerate_fields(100).empty());
  const auto f144 = enumerate_fields(144);
  ASSERT_EQ(f144.size(), 1u);
  Triple s = f144[0].values();
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (Triple{-3, -1, 3}));
  EXPECT_EQ(to_string_u128(f144[0].discriminant()), "144");
  const auto f225 = enumerate_fields(225);
  ASSERT_EQ(f225.size(), 2u);
  Triple s2 = f225[1].values();
  std::sort(s2.begin(), s2.end());
  EXPECT_EQ(s2, (Triple{-15, -3, 5}));
}

TEST(Enumerate, MatchesBruteForce) {
  for (i64 X : {1000, 20000, 100000}) {
    std::set<Triple> lib;
    for (const auto& t : enumerate_fields(X)) {
      Triple k = t.values();
      std::sort(k.begin(), k.end());
      ASSERT_TRUE(lib.insert(k).second);
      ASSERT_LE(t.discriminant(), static_cast<u128>(X));
    }
    std::set<Triple> brute;
    std::map<std::pair<int, int>, int> by_cell;
    for (const auto& f : oracle::fields_bruteforce(X)) {
      brute.insert(f.d);
      ++by_cell[{f.type, f.complex}];
    }
    EXPECT_EQ(lib, brute) << "X = " << X;
    std::map<std::pair<int, int>, int> lib_cell;
    for (const auto& t : enumerate_fields(X)) ++lib_cell[{t.type(), s_index(t.signature())}];
    EXPECT_EQ(lib_cell, by_cell);
  }
}

TEST(Enumerate, PartitionsCoverEachFieldOnce) {
  const u64 X = 200000;
  const auto all = enumerate_fields(X);
  for (int n : {2, 3, 7}) {
    std::size_t total = 0;
    std::set<Triple> seen;
    for (int i = 0; i < n; ++i) {
      for_each_field(X, [&](const AdmissibleTriple& t) {
        ++total;
        seen.insert(t.values());
      }, Partition{i, n});
    }
    EXPECT_EQ(total, all.size());
    EXPECT_EQ(seen.size(), all.size());
  }
}

TEST(Ordered, Examples) {
  const auto s1 = enumerate_ordered(4225, 1, {1, 1});
  int hits = 0;
  for (const auto& t : s1) {
    Triple k = t.values();
    std::sort(k.begin(), k.end());
    if (k == Triple{5, 13, 65}) ++hits;
  }
  EXPECT_EQ(hits, 6);
  int h4 = 0;
  for (const auto& t : enumerate_ordered(2304, 4, {1, 1})) {
    if (t.values() == Triple{2, 6, 3} || t.values() == Triple{6, 2, 3}) ++h4;
    EXPECT_TRUE(t.in_s_h());
  }
  EXPECT_EQ(h4, 2);
  EXPECT_TRUE(enumerate_ordered(100, 1, {1, 1}).empty());
}

TEST(Ordered, MultiplicityMatchesFieldCounts) {
  for (u64 X : {10'000ULL, 100'000ULL}) {
    std::array<std::array<u64, 2>, 5> fields{};
    for (const auto& t : enumerate_fields(X)) ++fields[t.type()][s_index(t.signature())];
    for (int h = 1; h <= 4; ++h) {
      for (SignPair sigma : kAllSignPairs) {
        const u64 n = enumerate_ordered(X, h, sigma).size();
        if (sigma == SignPair{1, 1}) {
          EXPECT_EQ(n, kMultiplicity[h] * fields[h][0]) << "h=" << h;
        }
      }
      u64 complex = 0;
      for (SignPair sigma : {SignPair{1, -1}, SignPair{-1, 1}, SignPair{-1, -1}}) {
        complex += enumerate_ordered(X, h, sigma).size();
      }
      EXPECT_EQ(complex, kMultiplicity[h] * fields[h][1]) << "h=" << h;
    }
  }
}
