#pragma once

// Q8-, D4- and C4-embeddability of biquadratic and quadratic fields over Q.
//
// The primary deciders evaluate the local-condition tables (one predicate per
// prime divisibility pattern, at p = 2 and at odd p | d1 d2). The *_witt and
// *_norm variants decide the same questions from Hilbert symbols and serve as
// independent oracles.

#include <array>

#include "biquad/arith.hpp"

namespace biquad {

struct D4Verdict {
  bool overall = false;
  /// Cyclic over Q(sqrt d1), Q(sqrt d2), Q(sqrt d1 d2).
  std::array<bool, 3> cyclic_over{};
  friend bool operator==(const D4Verdict&, const D4Verdict&) = default;
};

/// All inputs: distinct squarefree integers != 0, 1; std::invalid_argument
/// otherwise.
bool admits_q8(i64 d1, i64 d2);
bool admits_q8_witt(i64 d1, i64 d2);

/// Case i in {1, 2, 3}: a D4-extension cyclic over M_1 = Q(sqrt d1),
/// M_2 = Q(sqrt d2) or M_3 = Q(sqrt d1 d2).
bool admits_d4_cyclic(i64 d1, i64 d2, int i);
/// Same question via (d2, d1 d2)_v, (d1, d1 d2)_v, (d1, d2)_v = 1 at all v.
bool admits_d4_cyclic_norm(i64 d1, i64 d2, int i);
D4Verdict admits_d4(i64 d1, i64 d2);

/// Q(sqrt d) lies in a C4-extension: d > 0 and no prime 3 mod 4 divides d.
bool admits_c4(i64 d);

}  // namespace biquad
