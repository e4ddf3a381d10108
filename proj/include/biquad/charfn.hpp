#pragma once

// Divisor-sum characteristic functions: the Q8 and D4 indicators written as
// sums over factorizations D_i = D_i1 D_i2 weighted by 2^{-omega} g(D).
// Independent of the local-table deciders in embed.hpp.

#include <array>

#include "biquad/arith.hpp"
#include "biquad/dyadic.hpp"
#include "biquad/fields.hpp"

namespace biquad {

/// Six pairwise coprime, positive, odd, squarefree integers
/// (D11, D12, D21, D22, D31, D32).
class DTuple {
 public:
  DTuple() = default;
  /// Throws std::invalid_argument if the invariants fail.
  DTuple(i64 d11, i64 d12, i64 d21, i64 d22, i64 d31, i64 d32);

  /// i in {1,2,3}, j in {1,2}.
  i64 at(int i, int j) const { return v_[2 * (i - 1) + (j - 1)]; }
  /// D_i = D_i1 D_i2.
  i64 big(int i) const { return at(i, 1) * at(i, 2); }
  const std::array<i64, 6>& values() const { return v_; }
  int omega() const;

  friend bool operator==(const DTuple&, const DTuple&) = default;

 private:
  std::array<i64, 6> v_{1, 1, 1, 1, 1, 1};
};

/// (D22 D32 / D11)(D12 D32 / D21)(D12 D22 / D31).
int g_of(const DTuple& t);
/// eta(a, b+2) eta(b, c+2) eta(c, a+2); a, b, c odd.
int phi(i64 a, i64 b, i64 c);

/// d1 = e1 (2) D1 D3, d2 = e2 (2) D2 D3 with D3 = gcd (halved when even).
struct Split {
  i64 D1 = 1, D2 = 1, D3 = 1;
  bool even = false;
  int e1 = 1, e2 = 1;
  friend bool operator==(const Split&, const Split&) = default;
};

/// Any admissible same-parity pair. Throws std::invalid_argument on mixed
/// parity or invalid input.
Split split_pair(i64 d1, i64 d2);
/// As split_pair, and additionally requires d1, d2 > 0.
Split split_q8(i64 d1, i64 d2);

/// The raw divisor sums (exact); the indicators below check that these are
/// 0 or 1 and throw std::logic_error otherwise.
Dyadic q8_divisor_sum(i64 d1, i64 d2);
Dyadic m_divisor_sum(i64 d1, i64 d2, int i);
Dyadic d4_divisor_sum(i64 d1, i64 d2);
/// 1_{M_i} 1_{M_j} (mask has bits i-1 set; at least two bits) from the
/// psi forms.
Dyadic m_product_divisor_sum(i64 d1, i64 d2, unsigned mask);

int indicator_q8(i64 d1, i64 d2);
int indicator_m(i64 d1, i64 d2, int i);
int indicator_d4(i64 d1, i64 d2);
int indicator_m_product(i64 d1, i64 d2, unsigned mask);

inline int indicator_q8(const AdmissibleTriple& t) { return indicator_q8(t.d1(), t.d2()); }
inline int indicator_d4(const AdmissibleTriple& t) { return indicator_d4(t.d1(), t.d2()); }

}  // namespace biquad
