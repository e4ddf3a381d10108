#pragma once

// Residue-class weight functions on H^6, H = (Z/8)^x, the finite S-tables,
// and direct evaluation of the character sums G_w(x; Psi).

#include <array>
#include <vector>

#include "biquad/charfn.hpp"
#include "biquad/dyadic.hpp"
#include "biquad/fields.hpp"

namespace biquad {

/// (w11, w12, w21, w22, w31, w32), each in {1, 3, 5, 7}.
class ResidueTuple {
 public:
  static constexpr int kCount = 4096;

  ResidueTuple() = default;
  /// Throws std::invalid_argument unless every entry is in {1, 3, 5, 7}.
  explicit ResidueTuple(const std::array<int, 6>& w);
  static ResidueTuple from_index(int index);
  /// Base-4 digits (w - 1)/2, w11 least significant.
  int index() const;

  int at(int i, int j) const { return w_[2 * (i - 1) + (j - 1)]; }
  const std::array<int, 6>& values() const { return w_; }
  friend bool operator==(const ResidueTuple&, const ResidueTuple&) = default;

 private:
  std::array<int, 6> w_{1, 1, 1, 1, 1, 1};
};

/// (delta11, ..., delta32), each 0 or 1.
class DeltaMask {
 public:
  DeltaMask() = default;
  explicit DeltaMask(const std::array<int, 6>& d);
  int at(int i, int j) const { return d_[2 * (i - 1) + (j - 1)]; }
  const std::array<int, 6>& values() const { return d_; }
  bool is_zero() const;

 private:
  std::array<int, 6> d_{0, 0, 0, 0, 0, 0};
};

enum class Group { Q8, D4, None };

/// f_h(w; Q8) in {-1, 0, 1}.
int f_q8(int h, const ResidueTuple& w);
/// f_h^sigma(w; D4).
int f_d4(int h, SignPair sigma, const ResidueTuple& w);
/// f_h^sigma(w; G); zero for Q8 unless sigma = (+,+).
int f_weight(Group g, int h, SignPair sigma, const ResidueTuple& w);
/// r_h^sigma(D; D4), the psi-terms.
int r_d4(int h, SignPair sigma, const DTuple& t);

/// 1[w11=w21=w31=1] 1[d12=d22=d32=0] + 1[w12=w22=w32=1] 1[d11=d21=d31=0].
int Y(const ResidueTuple& w, const DeltaMask& delta = {});

/// Sum over H^6 of f_h^sigma(w; G) Y(w).
int s_table(Group g, SignPair sigma, int h);

/// f_h^sigma(w) on ((Z/4)^x)^3, w_i in {1, 3}.
int f_biquad(int h, SignPair sigma, const std::array<int, 3>& w);
int s_table_biquad(SignPair sigma, int h);

/// Sum over D-tuples with Delta(D) <= x and D = w mod 8 of
/// 2^{-omega(D)} Psi(D) g(D).
Dyadic g_w_direct(u64 x, const ResidueTuple& w, const DeltaMask& delta = {});
/// The same sum for every residue tuple at once, indexed by
/// ResidueTuple::index().
std::vector<Dyadic> g_w_all(u64 x, const DeltaMask& delta = {});

}  // namespace biquad
