#pragma once

// Exact counts of biquadratic fields by type and signature, with and without
// a Q8/D4 embedding condition, next to the predicted main terms.

#include <array>
#include <string>

#include "biquad/asymptotics.hpp"
#include "biquad/fields.hpp"
#include "biquad/weights.hpp"

namespace biquad {

inline constexpr u64 kMaxCensusX = 1'000'000'000'000ULL;

std::string to_string(Group g);
/// Accepts "q8", "d4", "none" (any case). Throws std::invalid_argument.
Group parse_group(const std::string& s);

struct CensusCell {
  u64 fields = 0;
  /// Fields admitting the group; equals fields for Group::None.
  u64 admitting = 0;
  double predicted = 0;
  /// admitting / predicted, NaN when nothing is predicted.
  double ratio = 0;
  friend bool operator==(const CensusCell&, const CensusCell&) = default;
};

struct CensusReport {
  u64 X = 0;
  Group group = Group::None;
  u64 prime_bound = kDefaultPrimeBound;
  /// cells[h][s], h in 1..4 (index 0 unused), s = 0 real, 1 complex.
  std::array<std::array<CensusCell, 2>, 5> cells{};
  /// Per-signature totals; predicted from the closed-form constant.
  std::array<CensusCell, 2> by_signature{};
  CensusCell total;
  double seconds = 0;
  int threads = 1;

  const CensusCell& at(int h, Signature s) const { return cells[h][s == Signature::TotallyReal ? 0 : 1]; }
  const CensusCell& at(Signature s) const { return by_signature[s == Signature::TotallyReal ? 0 : 1]; }
};

/// Whether the field of t embeds in a G-extension (always true for None).
bool admits(Group g, const AdmissibleTriple& t);

/// Exact census over all fields with discriminant <= X. Counts do not
/// depend on the thread count. Throws std::invalid_argument unless
/// 1 <= X <= 10^12 and threads >= 1.
CensusReport census_exact(u64 X, Group g, int threads = 1, u64 prime_bound = kDefaultPrimeBound);
/// Same, reusing precomputed constants.
CensusReport census_exact(u64 X, Group g, int threads, const Constants& constants);

/// |S_h^sigma(X)| for every (h, sigma) and the field counts per (h, signature).
struct OrderedCensus {
  u64 X = 0;
  /// ordered[h][index_of(sigma)].
  std::array<std::array<u64, 4>, 5> ordered{};
  /// fields[h][s], s = 0 real, 1 complex.
  std::array<std::array<u64, 2>, 5> fields{};
};

OrderedCensus ordered_census(u64 X);

}  // namespace biquad
