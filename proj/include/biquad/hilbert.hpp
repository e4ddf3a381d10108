#pragma once

// Hilbert symbols (a, b)_v over Q at every place, the product formula, and
// the place-by-place test for equivalence of aX^2 + bY^2 + abZ^2 with the
// unit form U^2 + V^2 + W^2.

#include <string>
#include <vector>

#include "biquad/arith.hpp"

namespace biquad {

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place infinity() { return Place(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place finite(i64 p);

  bool is_infinite() const { return prime_ == 0; }
  /// Meaningless for the infinite place.
  i64 prime() const { return prime_; }
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;
  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(i64 p) : prime_(p) {}
  i64 prime_;
};

/// (a, b)_p for a prime p, from the valuations and unit parts of a and b.
int hilbert_p(i64 a, i64 b, i64 p);

/// (a, b)_infinity: -1 iff both arguments are negative.
int hilbert_inf(i64 a, i64 b);

int hilbert(i64 a, i64 b, const Place& v);

/// infinity, 2, and every odd prime dividing ab, in that order.
std::vector<Place> relevant_places(i64 a, i64 b);

/// Product of (a, b)_v over relevant_places(a, b). Always +1.
int hilbert_product(i64 a, i64 b);

/// True iff (a,b)_v (a,a)_v (b,b)_v = 1 at every place. Throws
/// std::invalid_argument unless a, b are distinct squarefree integers != 0, 1.
bool witt_equiv(i64 a, i64 b);

}  // namespace biquad
