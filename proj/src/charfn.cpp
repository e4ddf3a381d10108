#include "biquad/charfn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace biquad {

namespace {

// Characters on positive odd n.
int chi_m1(i64 n) { return (n & 3) == 1 ? 1 : -1; }
int chi_2(i64 n) {
  const i64 r = n & 7;
  return (r == 1 || r == 7) ? 1 : -1;
}
int chi_m2(i64 n) { return chi_m1(n) * chi_2(n); }
int chi_sign(int e, i64 n) { return e > 0 ? 1 : chi_m1(n); }

int g_raw(i64 d11, i64 d12, i64 d21, i64 d22, i64 d31, i64 d32) {
  return kronecker(d22, d11) * kronecker(d32, d11) * kronecker(d12, d21) * kronecker(d32, d21) *
         kronecker(d12, d31) * kronecker(d22, d31);
}

int phi_raw(i64 a, i64 b, i64 c) { return eta(a, b + 2) * eta(b, c + 2) * eta(c, a + 2); }

std::vector<i64> divisors_of_squarefree(i64 n) {
  std::vector<i64> out{1};
  for (const auto& pp : factor(n)) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * pp.prime);
  }
  return out;
}

// Integer numerators (over 2^omega) of the inner divisor sums. In the even
// case every sum, the psi sum included, carries (2/D11 D21).
struct InnerSums {
  i64 q8 = 0;
  i64 m[3] = {0, 0, 0};
  i64 plain = 0;
  int omega = 0;
};

InnerSums inner_sums(const Split& s) {
  InnerSums out;
  out.omega = omega(s.D1) + omega(s.D2) + omega(s.D3);
  const auto v1 = divisors_of_squarefree(s.D1);
  const auto v2 = divisors_of_squarefree(s.D2);
  const auto v3 = divisors_of_squarefree(s.D3);
  for (i64 d11 : v1) {
    const i64 d12 = s.D1 / d11;
    for (i64 d21 : v2) {
      const i64 d22 = s.D2 / d21;
      for (i64 d31 : v3) {
        const i64 d32 = s.D3 / d31;
        const int g = g_raw(d11, d12, d21, d22, d31, d32);
        const int two = s.even ? chi_2(d11) * chi_2(d21) : 1;
        const int core = phi_raw(d11, d21, d31) * two * g;
        out.q8 += core;
        const int signs = chi_sign(s.e1, d21) * chi_sign(s.e1, d31) * chi_sign(s.e2, d11) *
                          chi_sign(s.e2, d31);
        out.m[0] += signs * chi_m1(d11) * chi_m1(d31) * core;
        out.m[1] += signs * chi_m1(d21) * chi_m1(d31) * core;
        out.m[2] += signs * chi_m1(d11) * chi_m1(d21) * core;
        out.plain += two * g;
      }
    }
  }
  return out;
}

// 1 + eta(...)(2/D1 D2)^{even}: 0 or 2, for the three cyclic cases.
int m_bracket(const Split& s, int i) {
  const i64 a = s.e1 * s.D1 * s.D3;
  const i64 b = s.e2 * s.D2 * s.D3;
  const int two = s.even ? chi_2(s.D1) * chi_2(s.D2) : 1;
  const int e = i == 1 ? eta(a + 2, b) : i == 2 ? eta(a, b + 2) : eta(a, b);
  return 1 + e * two;
}

bool m_sign_ok(const Split& s, int i) {
  const SignPair sigma{s.e1, s.e2};
  switch (i) {
    case 1:
      return !(sigma == SignPair{1, -1});
    case 2:
      return !(sigma == SignPair{-1, 1});
    case 3:
      return !(sigma == SignPair{-1, -1});
  }
  throw std::invalid_argument("cyclic case must be 1, 2 or 3");
}

// Sign indicator and psi value for a product of two or three 1_{M_i}.
int psi_term(const Split& s, unsigned mask) {
  switch (mask) {
    case 0b011:
      return s.e1 == s.e2 ? psi(s.D1) * psi(s.D2) : 0;
    case 0b101:
      return s.e2 > 0 ? psi(s.D2) * psi(s.D3) : 0;
    case 0b110:
      return s.e1 > 0 ? psi(s.D1) * psi(s.D3) : 0;
    case 0b111:
      return s.e1 > 0 && s.e2 > 0 ? psi(s.D1) * psi(s.D2) * psi(s.D3) : 0;
  }
  throw std::invalid_argument("product mask must select at least two cases");
}

// (1 + (2/D1 D2)) in the even case, 2 otherwise; the result is over 2.
int even_psi_factor(const Split& s) { return s.even ? 1 + chi_2(s.D1) * chi_2(s.D2) : 2; }

int to_indicator(const Dyadic& v, const char* what) {
  if (v == Dyadic(0)) return 0;
  if (v == Dyadic(1)) return 1;
  throw std::logic_error(std::string(what) + " divisor sum is " + v.to_string());
}

}  // namespace

DTuple::DTuple(i64 d11, i64 d12, i64 d21, i64 d22, i64 d31, i64 d32) : v_{d11, d12, d21, d22, d31, d32} {
  for (std::size_t i = 0; i < 6; ++i) {
    const i64 d = v_[i];
    if (d <= 0 || (d & 1) == 0 || !is_squarefree(d)) {
      throw std::invalid_argument("DTuple entries must be positive, odd and squarefree");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(d, v_[j]) != 1) throw std::invalid_argument("DTuple entries must be pairwise coprime");
    }
  }
}

int DTuple::omega() const {
  int w = 0;
  for (i64 d : v_) w += biquad::omega(d);
  return w;
}

int g_of(const DTuple& t) {
  const auto& v = t.values();
  return g_raw(v[0], v[1], v[2], v[3], v[4], v[5]);
}

int phi(i64 a, i64 b, i64 c) {
  if ((a & 1) == 0 || (b & 1) == 0 || (c & 1) == 0) throw std::invalid_argument("phi: arguments must be odd");
  return phi_raw(a, b, c);
}

Split split_pair(i64 d1, i64 d2) {
  third_d(d1, d2);
  if (!is_squarefree(d1)) throw std::invalid_argument("not squarefree: " + std::to_string(d1));
  if (!is_squarefree(d2)) throw std::invalid_argument("not squarefree: " + std::to_string(d2));
  if (((d1 ^ d2) & 1) != 0) throw std::invalid_argument("d1 and d2 must have the same parity");
  Split s;
  s.e1 = sign_of(d1);
  s.e2 = sign_of(d2);
  s.even = (d1 & 1) == 0;
  i64 a = d1 < 0 ? -d1 : d1;
  i64 b = d2 < 0 ? -d2 : d2;
  if (s.even) {
    a /= 2;
    b /= 2;
  }
  s.D3 = std::gcd(a, b);
  s.D1 = a / s.D3;
  s.D2 = b / s.D3;
  return s;
}

Split split_q8(i64 d1, i64 d2) {
  if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("split_q8: d1, d2 must be positive");
  return split_pair(d1, d2);
}

Dyadic q8_divisor_sum(i64 d1, i64 d2) {
  const Split s = split_pair(d1, d2);
  if (s.e1 < 0 || s.e2 < 0) return Dyadic(0);
  const i64 a = s.D1 * s.D3, b = s.D2 * s.D3;
  const int chi = s.even ? chi_m2(s.D1) * chi_m2(s.D2) : chi_m1(s.D1) * chi_m1(s.D2);
  const int bracket = 1 + eta(a, b) * chi;
  if (bracket == 0) return Dyadic(0);
  const InnerSums in = inner_sums(s);
  return Dyadic(in.q8 * bracket, in.omega + 1);
}

Dyadic m_divisor_sum(i64 d1, i64 d2, int i) {
  const Split s = split_pair(d1, d2);
  if (!m_sign_ok(s, i)) return Dyadic(0);
  const int bracket = m_bracket(s, i);
  if (bracket == 0) return Dyadic(0);
  const InnerSums in = inner_sums(s);
  return Dyadic(in.m[i - 1] * bracket, in.omega + 1);
}

Dyadic m_product_divisor_sum(i64 d1, i64 d2, unsigned mask) {
  const Split s = split_pair(d1, d2);
  const int t = psi_term(s, mask) * even_psi_factor(s);
  if (t == 0) return Dyadic(0);
  const InnerSums in = inner_sums(s);
  return Dyadic(in.plain * t, in.omega + 1);
}

Dyadic d4_divisor_sum(i64 d1, i64 d2) {
  const Split s = split_pair(d1, d2);
  const InnerSums in = inner_sums(s);
  // Everything over 2^{omega+1}.
  i64 num = 0;
  for (int i = 1; i <= 3; ++i) {
    if (m_sign_ok(s, i)) num += m_bracket(s, i) * in.m[i - 1];
  }
  const int brace = -psi_term(s, 0b011) - psi_term(s, 0b101) - psi_term(s, 0b110) + psi_term(s, 0b111);
  num += brace * even_psi_factor(s) * in.plain;
  return Dyadic(num, in.omega + 1);
}

int indicator_q8(i64 d1, i64 d2) { return to_indicator(q8_divisor_sum(d1, d2), "Q8"); }

int indicator_m(i64 d1, i64 d2, int i) { return to_indicator(m_divisor_sum(d1, d2, i), "M_i"); }

int indicator_d4(i64 d1, i64 d2) { return to_indicator(d4_divisor_sum(d1, d2), "D4"); }

int indicator_m_product(i64 d1, i64 d2, unsigned mask) {
  return to_indicator(m_product_divisor_sum(d1, d2, mask), "M_i product");
}

}  // namespace biquad
