#pragma once

// Biquadratic fields Q(sqrt d1, sqrt d2) as admissible triples (d1, d2, d3),
// their type h in {1..4}, discriminant, signature, and enumeration by
// discriminant.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "biquad/arith.hpp"

namespace biquad {

using u128 = unsigned __int128;

std::string to_string_u128(u128 v);

enum class Signature { TotallyReal, TotallyComplex };

std::string to_string(Signature s);

/// Sign pair (sign d1, sign d2).
struct SignPair {
  int e1 = 1;
  int e2 = 1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

inline constexpr std::array<SignPair, 4> kAllSignPairs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

/// Index of a sign pair in kAllSignPairs.
int index_of(SignPair s);
std::string to_string(SignPair s);

/// m_h: orderings of one field inside S_h.
inline constexpr std::array<int, 5> kMultiplicity{0, 6, 2, 2, 2};
/// tau_h: power of two in the discriminant.
inline constexpr std::array<int, 5> kTau{0, 1, 16, 16, 64};
/// T_h: tau_h for h = 1, 3 and 4 tau_h for h = 2, 4.
inline constexpr std::array<int, 5> kTBig{0, 1, 64, 16, 256};

/// d1 d2 / gcd(d1, d2)^2. Throws std::invalid_argument when d1 == d2.
i64 third_d(i64 d1, i64 d2);

/// Field discriminant of Q(sqrt d): d if d = 1 mod 4, else 4d (as |.|).
u64 quadratic_disc_abs(i64 d);

/// An ordered admissible triple.
class AdmissibleTriple {
 public:
  /// Validates d1, d2 (distinct, squarefree, != 0, 1) and derives d3.
  static AdmissibleTriple from_pair(i64 d1, i64 d2);
  /// Trusted construction from already-factored entries; d3 must be the
  /// third entry of the triple.
  AdmissibleTriple(SquarefreeInt d1, SquarefreeInt d2, SquarefreeInt d3);

  const SquarefreeInt& d(int i) const { return entries_[i - 1]; }
  i64 d1() const { return entries_[0].value(); }
  i64 d2() const { return entries_[1].value(); }
  i64 d3() const { return entries_[2].value(); }

  /// Residue pattern type in {1, 2, 3, 4}; depends only on the field.
  int type() const { return type_; }
  SignPair signs() const { return {entries_[0].sign(), entries_[1].sign()}; }
  Signature signature() const;
  /// d1 and d2 have the same parity (equivalently d3 is odd).
  bool parity_matched() const { return ((d1() ^ d2()) & 1) == 0; }
  /// The ordering obeys the residue conventions of S_h.
  bool in_s_h() const;

  /// tau_h |d1 d2 d3|. Throws std::overflow_error if it exceeds 128 bits.
  u128 discriminant() const;
  /// Decimal discriminant; valid for all 64-bit inputs.
  std::string discriminant_decimal() const;
  /// gcd(|d1|, |d2|) * |d1| / gcd * |d2| / gcd = sqrt(|d1 d2 d3|).
  u128 root_product() const;

  std::array<i64, 3> values() const { return {d1(), d2(), d3()}; }
  friend bool operator==(const AdmissibleTriple& a, const AdmissibleTriple& b) {
    return a.values() == b.values();
  }

 private:
  std::array<SquarefreeInt, 3> entries_;
  int type_;
};

/// Type from residues mod 4 of any admissible triple.
int triple_type(const AdmissibleTriple& t);
u128 discriminant(const AdmissibleTriple& t);

/// Canonical representative of the field generated by d1, d2: the residue
/// class that occurs once mod 4 goes last (for type 1 all three are sorted),
/// and the rest are sorted by (|d|, sign).
AdmissibleTriple canonicalize(i64 d1, i64 d2);
/// Canonical ordering of a triple's entries.
std::array<i64, 3> canonical_order(std::array<i64, 3> d);

/// Range of the enumeration index m = sqrt(|d1 d2 d3|) handled by one worker.
struct Partition {
  int index = 0;
  int count = 1;
};

using TripleVisitor = std::function<void(const AdmissibleTriple&)>;

/// Visits one canonical triple per biquadratic field with discriminant <= x.
/// Partitions split the enumeration index into interleaved residue classes.
void for_each_field(u64 x, const TripleVisitor& visit, Partition part = {});
std::vector<AdmissibleTriple> enumerate_fields(u64 x);

/// Visits every ordered triple of S_h^sigma(x).
void for_each_ordered(u64 x, int h, SignPair sigma, const TripleVisitor& visit, Partition part = {});
std::vector<AdmissibleTriple> enumerate_ordered(u64 x, int h, SignPair sigma);

}  // namespace biquad
