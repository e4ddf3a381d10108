#include "biquad/embed.hpp"

#include <stdexcept>
#include <string>

#include "biquad/fields.hpp"
#include "biquad/hilbert.hpp"

namespace biquad {

namespace {

// Local data at an odd prime p | d1 d2: d_{i,p} = d_i with p removed.
struct OddPlace {
  i64 d1, d2, p, d1p, d2p;
};

// Local data at 2: d_{i,2} = d_i with 2 removed.
struct TwoPlace {
  i64 d1, d2, d12, d22;
};

using OddRow = int (*)(const OddPlace&);
using TwoRow = int (*)(const TwoPlace&);

// A local-condition table: the rows for p | d1 only, p | d2 only, p | both
// (odd p), and the four divisibility rows at p = 2. Every entry must be +1.
struct LocalTable {
  SignPair excluded;  // sign pair excluded outright; (0,0) for "only (+,+)"
  bool require_positive;
  OddRow odd_d1_only, odd_d2_only, odd_both;
  TwoRow two_neither, two_d1_only, two_d2_only, two_both;
};

int k2(i64 n) { return kronecker(2, n); }
int km1(i64 n) { return kronecker(-1, n); }
int km2(i64 n) { return kronecker(-2, n); }
int kp(i64 a, const OddPlace& o) { return kronecker(a, o.p); }

// Q8: the Witt criterion written out prime by prime.
const LocalTable kQ8Table{
    {0, 0},
    true,
    [](const OddPlace& o) { return kp(-o.d2, o); },
    [](const OddPlace& o) { return kp(-o.d1, o); },
    [](const OddPlace& o) { return kp(-1, o) * kp(o.d1p, o) * kp(o.d2p, o); },
    [](const TwoPlace& t) { return eta(t.d1, t.d2) * km1(t.d1) * km1(t.d2); },
    [](const TwoPlace& t) { return eta(t.d12, t.d2) * km1(t.d12) * km2(t.d2); },
    [](const TwoPlace& t) { return eta(t.d1, t.d22) * km2(t.d1) * km1(t.d22); },
    [](const TwoPlace& t) { return eta(t.d12, t.d22) * km2(t.d12) * km2(t.d22); },
};

// D4, cyclic over Q(sqrt d1).
const LocalTable kD4CyclicOverM1{
    {1, -1},
    false,
    [](const OddPlace& o) { return kp(o.d2, o); },
    [](const OddPlace& o) { return kp(-o.d1, o); },
    [](const OddPlace& o) { return kp(o.d1p, o) * kp(o.d2p, o); },
    [](const TwoPlace& t) { return eta(t.d1 + 2, t.d2); },
    [](const TwoPlace& t) { return eta(t.d12 + 2, t.d2) * k2(t.d2); },
    [](const TwoPlace& t) { return eta(t.d1 + 2, t.d22) * k2(t.d1); },
    [](const TwoPlace& t) { return eta(t.d12 + 2, t.d22) * k2(t.d12) * k2(t.d22); },
};

// D4, cyclic over Q(sqrt d2).
const LocalTable kD4CyclicOverM2{
    {-1, 1},
    false,
    [](const OddPlace& o) { return kp(-o.d2, o); },
    [](const OddPlace& o) { return kp(o.d1, o); },
    [](const OddPlace& o) { return kp(o.d1p, o) * kp(o.d2p, o); },
    [](const TwoPlace& t) { return eta(t.d1, t.d2 + 2); },
    [](const TwoPlace& t) { return eta(t.d12, t.d2 + 2) * k2(t.d2); },
    [](const TwoPlace& t) { return eta(t.d1, t.d22 + 2) * k2(t.d1); },
    [](const TwoPlace& t) { return eta(t.d12, t.d22 + 2) * k2(t.d12) * k2(t.d22); },
};

// D4, cyclic over Q(sqrt d1 d2).
const LocalTable kD4CyclicOverM3{
    {-1, -1},
    false,
    [](const OddPlace& o) { return kp(o.d2, o); },
    [](const OddPlace& o) { return kp(o.d1, o); },
    [](const OddPlace& o) { return kp(-1, o) * kp(o.d1p, o) * kp(o.d2p, o); },
    [](const TwoPlace& t) { return eta(t.d1, t.d2); },
    [](const TwoPlace& t) { return eta(t.d12, t.d2) * k2(t.d2); },
    [](const TwoPlace& t) { return eta(t.d1, t.d22) * k2(t.d1); },
    [](const TwoPlace& t) { return eta(t.d12, t.d22) * k2(t.d12) * k2(t.d22); },
};

void validate_pair(i64 d1, i64 d2) {
  for (i64 d : {d1, d2}) {
    if (d == 0 || d == 1) throw std::invalid_argument("value must be squarefree and != 0, 1");
    if (!is_squarefree(d)) throw std::invalid_argument("not squarefree: " + std::to_string(d));
  }
  if (d1 == d2) throw std::invalid_argument("d1 and d2 must be distinct");
}

bool holds(const LocalTable& table, const SquarefreeInt& s1, const SquarefreeInt& s2) {
  const i64 d1 = s1.value(), d2 = s2.value();
  const SignPair sigma{s1.sign(), s2.sign()};
  if (table.require_positive && !(sigma == SignPair{1, 1})) return false;
  if (sigma == table.excluded) return false;

  // p = 2
  const TwoPlace two{d1, d2, remove_p(d1, 2), remove_p(d2, 2)};
  const bool e1 = s1.has_two(), e2 = s2.has_two();
  const int at_two = !e1 && !e2 ? table.two_neither(two)
                     : e1 && !e2 ? table.two_d1_only(two)
                     : !e1 && e2 ? table.two_d2_only(two)
                                 : table.two_both(two);
  if (at_two != 1) return false;

  // odd p | d1 d2; odd p not dividing d1 d2 impose no condition.
  auto p1 = s1.odd_primes(), p2 = s2.odd_primes();
  std::size_t i = 0, j = 0;
  while (i < p1.size() || j < p2.size()) {
    int r;
    if (j == p2.size() || (i < p1.size() && p1[i] < p2[j])) {
      const i64 p = p1[i++];
      r = table.odd_d1_only({d1, d2, p, d1 / p, d2});
    } else if (i == p1.size() || p2[j] < p1[i]) {
      const i64 p = p2[j++];
      r = table.odd_d2_only({d1, d2, p, d1, d2 / p});
    } else {
      const i64 p = p1[i];
      ++i;
      ++j;
      r = table.odd_both({d1, d2, p, d1 / p, d2 / p});
    }
    if (r != 1) return false;
  }
  return true;
}

const LocalTable& d4_table(int i) {
  switch (i) {
    case 1:
      return kD4CyclicOverM1;
    case 2:
      return kD4CyclicOverM2;
    case 3:
      return kD4CyclicOverM3;
  }
  throw std::invalid_argument("cyclic case must be 1, 2 or 3");
}

}  // namespace

bool admits_q8(i64 d1, i64 d2) {
  validate_pair(d1, d2);
  return holds(kQ8Table, SquarefreeInt(d1), SquarefreeInt(d2));
}

bool admits_q8_witt(i64 d1, i64 d2) {
  validate_pair(d1, d2);
  return d1 > 0 && d2 > 0 && witt_equiv(d1, d2);
}

bool admits_d4_cyclic(i64 d1, i64 d2, int i) {
  const LocalTable& table = d4_table(i);
  validate_pair(d1, d2);
  return holds(table, SquarefreeInt(d1), SquarefreeInt(d2));
}

bool admits_d4_cyclic_norm(i64 d1, i64 d2, int i) {
  d4_table(i);
  validate_pair(d1, d2);
  const i64 d3 = third_d(d1, d2);
  // d1 d2 and d3 differ by a square, so (a, d1 d2)_v = (a, d3)_v.
  const i64 a = i == 1 ? d2 : d1;
  const i64 b = i == 3 ? d2 : d3;
  for (const auto& v : relevant_places(a, b)) {
    if (hilbert(a, b, v) != 1) return false;
  }
  return true;
}

D4Verdict admits_d4(i64 d1, i64 d2) {
  validate_pair(d1, d2);
  const SquarefreeInt s1(d1), s2(d2);
  D4Verdict v;
  for (int i = 1; i <= 3; ++i) v.cyclic_over[i - 1] = holds(d4_table(i), s1, s2);
  v.overall = v.cyclic_over[0] || v.cyclic_over[1] || v.cyclic_over[2];
  return v;
}

bool admits_c4(i64 d) {
  if (d == 0 || d == 1) throw std::invalid_argument("value must be squarefree and != 0, 1");
  const SquarefreeInt s(d);
  if (d < 0) return false;
  for (i64 p : s.odd_primes()) {
    if (p % 4 != 1) return false;
  }
  return true;
}

}  // namespace biquad
