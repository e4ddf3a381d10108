#pragma once

// Slow, independent reference implementations used only by the tests. Nothing
// here calls into the library's number theory.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<i64> prime_divisors(i64 n) {
  n = std::llabs(n);
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_squarefree(i64 n) {
  n = std::llabs(n);
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return n != 0;
}

inline i64 powmod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % m);
    b = static_cast<i64>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/// Legendre symbol by Euler's criterion; p an odd prime.
inline int legendre(i64 a, i64 p) {
  const i64 r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Jacobi symbol (a/n) for odd n > 0 as a product of Legendre symbols.
inline int jacobi(i64 a, i64 n) {
  int s = 1;
  i64 m = n;
  for (i64 p = 3; p * p <= m; p += 2) {
    while (m % p == 0) {
      s *= legendre(a, p);
      m /= p;
    }
  }
  if (m > 1) s *= legendre(a, m);
  return s;
}

inline int mod_pos(i64 a, int m) { return static_cast<int>(((a % m) + m) % m); }

/// (-1/n) for odd n of either sign.
inline int chi4(i64 n) { return mod_pos(n, 4) == 1 ? 1 : -1; }
/// (2/n) for odd n of either sign.
inline int chi8(i64 n) {
  const int r = mod_pos(n, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}
inline int eta(i64 a, i64 b) { return (mod_pos(a, 4) == 3 && mod_pos(b, 4) == 3) ? -1 : 1; }

inline int psi(i64 n) {
  for (i64 p : prime_divisors(n)) {
    if (p % 4 == 3 || p == 2) return 0;
  }
  return 1;
}

inline bool sum_of_two_squares(i64 d) {
  for (i64 x = 0; x * x <= d; ++x) {
    for (i64 y = x; x * x + y * y <= d; ++y) {
      if (x * x + y * y == d) return true;
    }
  }
  return false;
}

/// The three symbols (d1,d2)_p, (d1,d1)_p, (d2,d2)_p read off the case
/// tables for squarefree d1, d2 (p odd: Legendre symbols; p = 2: eta and
/// (2/.)), where d_{i,p} = d_i / p.
inline std::array<int, 3> hilbert_table(i64 d1, i64 d2, i64 p) {
  const bool a = d1 % p == 0, b = d2 % p == 0;
  if (p != 2) {
    const int m1 = legendre(-1, p);
    if (!a && !b) return {1, 1, 1};
    if (a && !b) return {legendre(d2, p), m1, 1};
    if (!a && b) return {legendre(d1, p), 1, m1};
    return {m1 * legendre(d1 / p, p) * legendre(d2 / p, p), m1, m1};
  }
  if (!a && !b) return {eta(d1, d2), chi4(d1), chi4(d2)};
  if (a && !b) return {eta(d1 / 2, d2) * chi8(d2), chi4(d1 / 2), chi4(d2)};
  if (!a && b) return {eta(d1, d2 / 2) * chi8(d1), chi4(d1), chi4(d2 / 2)};
  return {eta(d1 / 2, d2 / 2) * chi8((d1 / 2) * (d2 / 2)), chi4(d1 / 2), chi4(d2 / 2)};
}

/// Sum of 2^{-omega} Psi g over odd positive squarefree pairwise coprime
/// sextuples with product <= sqrt(x), per residue tuple. Values are
/// numerators over 2^kScale, indexed by sum_k 4^k (w_k - 1)/2.
inline constexpr int kScale = 24;

inline std::vector<i64> g_w_bruteforce(u64 x, const std::array<int, 6>& delta) {
  u64 n = 0;
  while ((n + 1) * (n + 1) <= x) ++n;
  const i64 N = static_cast<i64>(n);
  std::vector<i64> odd_sf;
  for (i64 k = 1; k <= N; k += 2) {
    if (is_squarefree(k)) odd_sf.push_back(k);
  }
  std::vector<i64> out(4096, 0);
  std::array<i64, 6> D{};
  auto coprime_to_prefix = [&](int k, i64 v) {
    for (int j = 0; j < k; ++j) {
      if (std::gcd(D[j], v) != 1) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int k, i64 prod) -> void {
    if (k == 6) {
      int omega = 0;
      int weight = 1;
      for (int j = 0; j < 6; ++j) {
        omega += static_cast<int>(prime_divisors(D[j]).size());
        if (delta[j]) weight *= psi(D[j]);
      }
      if (weight == 0) return;
      const int g = jacobi(D[3] * D[5], D[0]) * jacobi(D[1] * D[5], D[2]) * jacobi(D[1] * D[3], D[4]);
      int idx = 0;
      for (int j = 5; j >= 0; --j) idx = idx * 4 + static_cast<int>((D[j] % 8 - 1) / 2);
      out[idx] += g * (i64{1} << (kScale - omega));
      return;
    }
    for (i64 v : odd_sf) {
      if (prod * v > N) break;
      if (!coprime_to_prefix(k, v)) continue;
      D[k] = v;
      self(self, k + 1, prod * v);
    }
  };
  rec(rec, 0, 1);
  return out;
}

/// Fundamental discriminant of Q(sqrt d).
inline i64 fundamental(i64 d) { return mod_pos(d, 4) == 1 ? d : 4 * d; }

struct BruteField {
  std::array<i64, 3> d;  // sorted
  int type;
  bool complex;
  i64 disc;
};

/// Biquadratic fields with discriminant <= X, found by pairing quadratic
/// fields and using disc = D1 D2 D3.
inline std::vector<BruteField> fields_bruteforce(i64 X) {
  const i64 L = X / 3;
  std::vector<std::pair<i64, i64>> quad;  // (d, |D|)
  for (i64 d = -L; d <= L; ++d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) continue;
    const i64 D = std::llabs(fundamental(d));
    if (D <= L) quad.push_back({d, D});
  }
  std::sort(quad.begin(), quad.end(), [](auto a, auto b) { return a.second < b.second || (a.second == b.second && a.first < b.first); });
  std::set<std::array<i64, 3>> seen;
  std::vector<BruteField> out;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    for (std::size_t j = i + 1; j < quad.size(); ++j) {
      const auto [a, A] = quad[i];
      const auto [b, B] = quad[j];
      if (A * B * 3 > X) break;
      const i64 g = std::gcd(a, b);
      const i64 c = (a / g) * (b / g);
      const i64 C = std::llabs(fundamental(c));
      if (A * B > X / C) continue;
      std::array<i64, 3> key{a, b, c};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      std::multiset<int> res{mod_pos(a, 4), mod_pos(b, 4), mod_pos(c, 4)};
      int type = 0;
      if (res == std::multiset<int>{1, 1, 1}) type = 1;
      else if (res == std::multiset<int>{1, 2, 2}) type = 2;
      else if (res == std::multiset<int>{1, 3, 3}) type = 3;
      else if (res == std::multiset<int>{2, 2, 3}) type = 4;
      out.push_back({key, type, a < 0 || b < 0 || c < 0, A * B * C});
    }
  }
  return out;
}

}  // namespace oracle
