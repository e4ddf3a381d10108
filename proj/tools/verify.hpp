#pragma once

// The verification suite behind the `tables` and `verify` subcommands.

#include <array>
#include <string>
#include <vector>

#include "biquad/arith.hpp"

namespace biquad::cli {

using Row = std::array<int, 4>;

/// Expected S-table rows, h = 1..4.
struct TableExpectations {
  Row q8{32, 32, 0, 32};
  /// Indexed like kAllSignPairs: (+,+), (+,-), (-,+), (-,-).
  std::array<Row, 4> d4{{{96, 96, 64, 96}, {64, 64, 32, 64}, {64, 64, 32, 64}, {64, 64, 64, 64}}};
  Row biquad{2, 4, 2, 4};
};

struct TableRow {
  std::string label;
  Row expected{};
  Row computed{};
  bool pass() const { return expected == computed; }
};

std::vector<TableRow> compute_tables(const TableExpectations& expect = {});

struct Check {
  std::string name;
  bool pass = true;
  u64 cases = 0;
  /// First failing input, smallest in the suite's enumeration order.
  std::string counterexample;
};

Check check_tables(const TableExpectations& expect = {});
/// admits_q8 = admits_q8_witt = indicator_q8, admits_d4 = indicator_d4 and
/// the three cyclic cases against indicator_m and the norm test, over
/// same-parity pairs with |d1|, |d2| <= bound, in order of max(|d1|, |d2|).
Check check_pair_oracles(i64 bound);
/// hilbert_product(a, b) = 1 for nonzero |a|, |b| <= bound.
Check check_hilbert_product(i64 bound);
/// admits_c4 against a sum-of-two-squares search for squarefree 2 <= d <= bound.
Check check_c4(i64 bound);
/// f_q8 in {-1, 0, 1} and |f_d4| <= 3 on every input.
Check check_weight_bounds();
/// |S_h^sigma(X)| summed over sigma of one signature equals m_h times the
/// field count.
Check check_ordered_counts(u64 X);

/// All suites; bound must be in [2, 1000].
std::vector<Check> run_verify(i64 bound, const TableExpectations& expect = {});

}  // namespace biquad::cli
