#include "verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "biquad/census.hpp"
#include "biquad/charfn.hpp"
#include "biquad/embed.hpp"
#include "biquad/hilbert.hpp"
#include "biquad/weights.hpp"

namespace biquad::cli {

namespace {

std::string row_string(const Row& r) {
  std::ostringstream os;
  os << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << r[3];
  return os.str();
}

std::string pair_string(i64 a, i64 b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

void fail(Check& c, const std::string& what) {
  if (c.pass) {
    c.pass = false;
    c.counterexample = what;
  }
}

// Returns an empty string when every decider agrees on (d1, d2).
std::string compare_pair(i64 d1, i64 d2) {
  std::ostringstream os;
  const bool q8 = admits_q8(d1, d2);
  const bool witt = admits_q8_witt(d1, d2);
  const int iq8 = indicator_q8(d1, d2);
  if (q8 != witt || q8 != (iq8 == 1)) {
    os << "q8: table " << q8 << ", witt " << witt << ", divisor sum " << iq8;
    return os.str();
  }
  const D4Verdict v = admits_d4(d1, d2);
  const int id4 = indicator_d4(d1, d2);
  if (v.overall != (id4 == 1)) {
    os << "d4: table " << v.overall << ", divisor sum " << id4;
    return os.str();
  }
  for (int i = 1; i <= 3; ++i) {
    const bool norm = admits_d4_cyclic_norm(d1, d2, i);
    const int im = indicator_m(d1, d2, i);
    if (v.cyclic_over[i - 1] != norm || norm != (im == 1)) {
      os << "cyclic over M" << i << ": table " << v.cyclic_over[i - 1] << ", norm " << norm << ", divisor sum "
         << im;
      return os.str();
    }
  }
  return {};
}

}  // namespace

std::vector<TableRow> compute_tables(const TableExpectations& expect) {
  std::vector<TableRow> rows;
  for (SignPair sigma : kAllSignPairs) {
    TableRow r{"Q8 " + to_string(sigma), sigma == SignPair{1, 1} ? expect.q8 : Row{}, {}};
    for (int h = 1; h <= 4; ++h) r.computed[h - 1] = s_table(Group::Q8, sigma, h);
    rows.push_back(r);
  }
  for (SignPair sigma : kAllSignPairs) {
    TableRow r{"D4 " + to_string(sigma), expect.d4[index_of(sigma)], {}};
    for (int h = 1; h <= 4; ++h) r.computed[h - 1] = s_table(Group::D4, sigma, h);
    rows.push_back(r);
  }
  for (SignPair sigma : kAllSignPairs) {
    TableRow r{"biquadratic " + to_string(sigma), expect.biquad, {}};
    for (int h = 1; h <= 4; ++h) r.computed[h - 1] = s_table_biquad(sigma, h);
    rows.push_back(r);
  }
  return rows;
}

Check check_tables(const TableExpectations& expect) {
  Check c{"S-tables", true, 0, {}};
  for (const TableRow& r : compute_tables(expect)) {
    ++c.cases;
    if (!r.pass()) {
      fail(c, r.label + ": expected " + row_string(r.expected) + ", computed " + row_string(r.computed));
    }
  }
  return c;
}

Check check_pair_oracles(i64 bound) {
  Check c{"embedding oracles", true, 0, {}};
  std::vector<i64> values;  // squarefree, != 0, 1, ordered by |d|
  for (i64 n = 1; n <= bound; ++n) {
    if (!is_squarefree(n)) continue;
    if (n != 1) values.push_back(n);
    values.push_back(-n);
  }
  auto test = [&](i64 d1, i64 d2) {
    if (d1 == d2 || ((d1 ^ d2) & 1) != 0) return true;
    ++c.cases;
    std::string err;
    try {
      err = compare_pair(d1, d2);
    } catch (const std::logic_error& e) {
      err = e.what();
    }
    if (!err.empty()) {
      fail(c, pair_string(d1, d2) + " " + err);
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    const i64 a = values[i];
    const i64 n = a < 0 ? -a : a;
    for (std::size_t j = 0; j < values.size(); ++j) {
      const i64 b = values[j];
      const i64 m = b < 0 ? -b : b;
      if (m > n || (m == n && j >= i)) break;
      if (!test(a, b) || !test(b, a)) return c;
    }
  }
  return c;
}

Check check_hilbert_product(i64 bound) {
  Check c{"Hilbert product formula", true, 0, {}};
  for (i64 n = 1; n <= bound; ++n) {
    for (i64 a : {n, -n}) {
      for (i64 b = -n; b <= n; ++b) {
        if (b == 0) continue;
        ++c.cases;
        if (hilbert_product(a, b) != 1 || hilbert_product(b, a) != 1) {
          fail(c, pair_string(a, b));
          return c;
        }
      }
    }
  }
  return c;
}

Check check_c4(i64 bound) {
  Check c{"C4 criterion", true, 0, {}};
  for (i64 d = 2; d <= bound; ++d) {
    if (!is_squarefree(d)) continue;
    ++c.cases;
    bool two_squares = false;
    for (i64 x = 0; x * x <= d && !two_squares; ++x) {
      const i64 r = d - x * x;
      const i64 y = static_cast<i64>(isqrt(static_cast<u64>(r)));
      two_squares = y * y == r;
    }
    if (admits_c4(d) != two_squares) {
      fail(c, "d = " + std::to_string(d));
      return c;
    }
  }
  return c;
}

Check check_weight_bounds() {
  Check c{"weight bounds", true, 0, {}};
  for (int i = 0; i < ResidueTuple::kCount; ++i) {
    const auto w = ResidueTuple::from_index(i);
    for (int h = 1; h <= 4; ++h) {
      ++c.cases;
      const int q = f_q8(h, w);
      if (q < -1 || q > 1) fail(c, "f_q8(h=" + std::to_string(h) + ", index " + std::to_string(i) + ")");
      for (SignPair sigma : kAllSignPairs) {
        ++c.cases;
        const int f = f_d4(h, sigma, w);
        if (f < -3 || f > 3) {
          fail(c, "f_d4(h=" + std::to_string(h) + ", " + to_string(sigma) + ", index " + std::to_string(i) + ")");
        }
      }
    }
  }
  return c;
}

Check check_ordered_counts(u64 X) {
  Check c{"ordered-triple counts", true, 0, {}};
  const OrderedCensus oc = ordered_census(X);
  for (int h = 1; h <= 4; ++h) {
    ++c.cases;
    const u64 real = oc.ordered[h][0];
    const u64 complex = oc.ordered[h][1] + oc.ordered[h][2] + oc.ordered[h][3];
    const u64 m = static_cast<u64>(kMultiplicity[h]);
    if (real != m * oc.fields[h][0] || complex != m * oc.fields[h][1]) {
      fail(c, "X = " + std::to_string(X) + ", h = " + std::to_string(h));
    }
  }
  return c;
}

std::vector<Check> run_verify(i64 bound, const TableExpectations& expect) {
  if (bound < 2 || bound > 1000) throw std::invalid_argument("verify: bound must be in [2, 1000]");
  return {check_tables(expect),
          check_weight_bounds(),
          check_hilbert_product(std::min<i64>(bound, 200)),
          check_c4(bound),
          check_pair_oracles(bound),
          check_ordered_counts(std::min<u64>(static_cast<u64>(bound) * bound, 100'000))};
}

}  // namespace biquad::cli
