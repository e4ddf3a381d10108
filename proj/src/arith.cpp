#include "biquad/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace biquad {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 abs_u(i64 n) { return n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n); }

constexpr i64 kFactorLimit = i64{1} << 62;

// Brent's variant of Pollard rho; n odd composite.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(i64 n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  if (n >= kFactorLimit || n <= -kFactorLimit) throw std::invalid_argument("factor: |n| must be below 2^62");
  u64 m = abs_u(n);
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == static_cast<i64>(p)) {
      ++out.back().exponent;
    } else {
      out.push_back({static_cast<i64>(p), 1});
    }
  }
  return out;
}

bool is_squarefree(i64 n) {
  const auto f = factor(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int omega(i64 n) { return static_cast<int>(factor(n).size()); }

i64 remove_p(i64 e, i64 p) {
  if (e == 0) throw std::invalid_argument("remove_p: zero argument");
  if (p < 2) throw std::invalid_argument("remove_p: p must be prime");
  while (e % p == 0) e /= p;
  return e;
}

int valuation(i64 e, i64 p) {
  if (e == 0) throw std::invalid_argument("valuation: zero argument");
  int v = 0;
  while (e % p == 0) {
    e /= p;
    ++v;
  }
  return v;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) {
    if (a == 0) throw std::invalid_argument("kronecker: (0/0) is undefined");
    return (a == 1 || a == -1) ? 1 : 0;
  }
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  // Pull out the power of two from the bottom.
  int v = std::countr_zero(static_cast<u64>(n));
  n >>= v;  // arithmetic shift keeps the sign
  int k = 1;
  if (v & 1) k = kTwoTable[((a % 8) + 8) % 8];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // Now n is odd and positive; reduce a into [0, n).
  u64 b = static_cast<u64>(n);
  u64 x;
  if (a >= 0) {
    x = static_cast<u64>(a) % b;
  } else {
    x = (b - abs_u(a) % b) % b;
  }
  // Jacobi symbol (x/b) with x >= 0, b odd > 0.
  while (x != 0) {
    int t = std::countr_zero(x);
    x >>= t;
    if (t & 1) k *= kTwoTable[b & 7];
    if ((x & b & 2) != 0) k = -k;
    u64 r = b % x;
    b = x;
    x = r;
  }
  return b == 1 ? k : 0;
}

int eta(i64 a, i64 b) {
  if ((a & 1) == 0 || (b & 1) == 0) throw std::invalid_argument("eta: arguments must be odd");
  const i64 ra = ((a % 4) + 4) % 4;
  const i64 rb = ((b % 4) + 4) % 4;
  return (ra == 3 && rb == 3) ? -1 : 1;
}

u64 isqrt(u64 x) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

int psi(i64 n) {
  if (n == 0) throw std::invalid_argument("psi: zero argument");
  for (const auto& pp : factor(n)) {
    if (pp.prime % 4 != 1) return 0;
  }
  return 1;
}

SquarefreeInt::SquarefreeInt(i64 value) : value_(value) {
  if (value == 0) throw std::invalid_argument("SquarefreeInt: zero");
  for (const auto& pp : factor(value)) {
    if (pp.exponent > 1) throw std::invalid_argument("not squarefree: " + std::to_string(value));
    if (pp.prime != 2) odd_primes_.push_back(pp.prime);
  }
}

SquarefreeInt::SquarefreeInt(i64 value, std::vector<i64> odd_primes)
    : value_(value), odd_primes_(std::move(odd_primes)) {}

i64 SquarefreeInt::odd_part() const {
  i64 m = value_ < 0 ? -value_ : value_;
  return has_two() ? m / 2 : m;
}

LpfSieve::LpfSieve(u64 limit) : lpf_(limit + 1, 0) {
  for (u64 i = 2; i <= limit; ++i) {
    if (lpf_[i] != 0) continue;
    lpf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (u64 j = i * i; j <= limit; j += i) {
      if (lpf_[j] == 0) lpf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

bool LpfSieve::squarefree_primes(u64 n, std::vector<i64>& out) const {
  out.clear();
  while (n > 1) {
    const u64 p = lpf_[n];
    n /= p;
    if (n % p == 0) {
      out.clear();
      return false;
    }
    out.push_back(static_cast<i64>(p));
  }
  return true;
}

Factorization LpfSieve::factor(u64 n) const {
  Factorization out;
  while (n > 1) {
    const u64 p = lpf_[n];
    n /= p;
    if (!out.empty() && out.back().prime == static_cast<i64>(p)) {
      ++out.back().exponent;
    } else {
      out.push_back({static_cast<i64>(p), 1});
    }
  }
  return out;
}

std::vector<std::uint32_t> primes_up_to(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    if (i > limit / i) continue;
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::string to_string(const Factorization& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ", ";
    os << '(' << f[i].prime << ',' << f[i].exponent << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace biquad
