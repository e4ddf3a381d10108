#pragma once

// Exact elementary number theory on 64-bit integers: factorization,
// squarefree tests, Kronecker symbols and the small sign/indicator
// functions used by the embedding criteria.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace biquad {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct PrimePower {
  i64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(u64 n);

/// Prime factorization of |n| with ascending primes. Throws
/// std::invalid_argument for n == 0 or |n| >= 2^62.
Factorization factor(i64 n);

bool is_squarefree(i64 n);

/// Number of distinct primes dividing |n|.
int omega(i64 n);

/// e with every factor p removed.
i64 remove_p(i64 e, i64 p);

/// Exponent of p in e (e != 0).
int valuation(i64 e, i64 p);

/// Kronecker symbol (a/n). Uses (a/-1) = sign(a) for a != 0 and (0/+-1) = 1.
/// Throws std::invalid_argument for (0, 0).
int kronecker(i64 a, i64 n);

/// (-1)^{((a-1)/2)((b-1)/2)} for odd a, b of either sign.
int eta(i64 a, i64 b);

/// 1 iff every prime divisor of n is 1 mod 4.
int psi(i64 n);

inline int sign_of(i64 n) { return n < 0 ? -1 : 1; }

/// floor(sqrt(x)).
u64 isqrt(u64 x);

/// Nonzero squarefree integer together with its factorization.
class SquarefreeInt {
 public:
  /// Throws std::invalid_argument unless value is nonzero and squarefree.
  explicit SquarefreeInt(i64 value);
  /// Trusted constructor for callers that already hold the odd primes.
  SquarefreeInt(i64 value, std::vector<i64> odd_primes);

  i64 value() const { return value_; }
  int sign() const { return sign_of(value_); }
  bool has_two() const { return (value_ & 1) == 0; }
  std::span<const i64> odd_primes() const { return odd_primes_; }
  /// |value| with the factor 2 removed.
  i64 odd_part() const;

  friend bool operator==(const SquarefreeInt& a, const SquarefreeInt& b) {
    return a.value_ == b.value_;
  }

 private:
  i64 value_;
  std::vector<i64> odd_primes_;
};

/// Least-prime-factor table for bulk factorization of 1..limit.
class LpfSieve {
 public:
  explicit LpfSieve(u64 limit);

  u64 limit() const { return lpf_.size() - 1; }
  /// Least prime factor of n (n >= 2), 0 for n < 2.
  std::uint32_t lpf(u64 n) const { return lpf_[n]; }
  /// Distinct primes of n in ascending order. Returns false (and clears out)
  /// when n is not squarefree.
  bool squarefree_primes(u64 n, std::vector<i64>& out) const;
  Factorization factor(u64 n) const;

 private:
  std::vector<std::uint32_t> lpf_;
};

/// All primes <= limit (plain sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(u64 limit);

std::string to_string(const Factorization& f);

}  // namespace biquad
