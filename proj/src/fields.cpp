#include "biquad/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace biquad {

namespace {

int mod4(i64 d) { return static_cast<int>(((d % 4) + 4) % 4); }

int type_from_residues(i64 a, i64 b, i64 c) {
  int count[4] = {0, 0, 0, 0};
  ++count[mod4(a)];
  ++count[mod4(b)];
  ++count[mod4(c)];
  if (count[1] == 3) return 1;
  if (count[1] == 1 && count[2] == 2) return 2;
  if (count[1] == 1 && count[3] == 2) return 3;
  if (count[3] == 1 && count[2] == 2) return 4;
  throw std::logic_error("residue pattern of an admissible triple is impossible");
}

u64 abs64(i64 v) { return v < 0 ? static_cast<u64>(-v) : static_cast<u64>(v); }

// Little-endian base 2^32 limbs.
using Limbs = std::vector<std::uint32_t>;

Limbs to_limbs(u128 v) {
  Limbs out;
  while (v) {
    out.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
  return out;
}

Limbs mul(const Limbs& a, const Limbs& b) {
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64 cur = static_cast<u64>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      u64 cur = static_cast<u64>(out[k]) + carry;
      out[k++] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string limbs_to_decimal(Limbs v) {
  if (v.empty()) return "0";
  std::string digits;
  while (!v.empty()) {
    u64 rem = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      u64 cur = (rem << 32) | v[i];
      v[i] = static_cast<std::uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// Sort key (|d|, sign) with negative before positive.
bool canonical_less(i64 a, i64 b) {
  return std::make_tuple(abs64(a), a > 0) < std::make_tuple(abs64(b), b > 0);
}

void validate_d(i64 d) {
  if (d == 0 || d == 1) throw std::invalid_argument("value must be squarefree and != 0, 1");
}

}  // namespace

std::string to_string_u128(u128 v) { return limbs_to_decimal(to_limbs(v)); }

std::string to_string(Signature s) { return s == Signature::TotallyReal ? "real" : "complex"; }

int index_of(SignPair s) {
  for (int i = 0; i < 4; ++i) {
    if (kAllSignPairs[i] == s) return i;
  }
  throw std::invalid_argument("invalid sign pair");
}

std::string to_string(SignPair s) {
  return std::string("(") + (s.e1 > 0 ? '+' : '-') + ',' + (s.e2 > 0 ? '+' : '-') + ')';
}

i64 third_d(i64 d1, i64 d2) {
  validate_d(d1);
  validate_d(d2);
  if (d1 == d2) throw std::invalid_argument("d1 and d2 must be distinct");
  const i64 g = std::gcd(d1, d2);
  return (d1 / g) * (d2 / g);
}

u64 quadratic_disc_abs(i64 d) {
  const u64 a = abs64(d);
  return mod4(d) == 1 ? a : 4 * a;
}

AdmissibleTriple AdmissibleTriple::from_pair(i64 d1, i64 d2) {
  validate_d(d1);
  validate_d(d2);
  SquarefreeInt s1(d1);
  SquarefreeInt s2(d2);
  const i64 d3 = third_d(d1, d2);
  std::vector<i64> p3;
  std::set_symmetric_difference(s1.odd_primes().begin(), s1.odd_primes().end(), s2.odd_primes().begin(),
                                s2.odd_primes().end(), std::back_inserter(p3));
  return AdmissibleTriple(std::move(s1), std::move(s2), SquarefreeInt(d3, std::move(p3)));
}

AdmissibleTriple::AdmissibleTriple(SquarefreeInt d1, SquarefreeInt d2, SquarefreeInt d3)
    : entries_{std::move(d1), std::move(d2), std::move(d3)},
      type_(type_from_residues(entries_[0].value(), entries_[1].value(), entries_[2].value())) {}

Signature AdmissibleTriple::signature() const {
  return (d1() > 0 && d2() > 0) ? Signature::TotallyReal : Signature::TotallyComplex;
}

bool AdmissibleTriple::in_s_h() const {
  const int r1 = mod4(d1()), r2 = mod4(d2()), r3 = mod4(d3());
  switch (type_) {
    case 1:
      return true;
    case 2:
      return r1 == 2 && r2 == 2 && r3 == 1;
    case 3:
      return r1 == 3 && r2 == 3 && r3 == 1;
    case 4:
      return r1 == 2 && r2 == 2 && r3 == 3;
  }
  return false;
}

u128 AdmissibleTriple::root_product() const {
  const u64 a = abs64(d1()), b = abs64(d2());
  const u64 g = std::gcd(a, b);
  return static_cast<u128>(a / g) * (b / g) * g;
}

u128 AdmissibleTriple::discriminant() const {
  const u128 r = root_product();
  const u128 limit = ~u128{0} / static_cast<u128>(kTau[type_]);
  if (r != 0 && r > limit / r) throw std::overflow_error("discriminant exceeds 128 bits");
  return r * r * static_cast<u128>(kTau[type_]);
}

std::string AdmissibleTriple::discriminant_decimal() const {
  const Limbs r = to_limbs(root_product());
  return limbs_to_decimal(mul(mul(r, r), to_limbs(static_cast<u128>(kTau[type_]))));
}

int triple_type(const AdmissibleTriple& t) { return t.type(); }

u128 discriminant(const AdmissibleTriple& t) { return t.discriminant(); }

std::array<i64, 3> canonical_order(std::array<i64, 3> d) {
  const int r[3] = {mod4(d[0]), mod4(d[1]), mod4(d[2])};
  int odd_one = -1;
  for (int i = 0; i < 3; ++i) {
    if (r[i] != r[(i + 1) % 3] && r[i] != r[(i + 2) % 3]) odd_one = i;
  }
  if (odd_one < 0) {
    std::sort(d.begin(), d.end(), canonical_less);
    return d;
  }
  std::array<i64, 3> out{};
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i != odd_one) out[k++] = d[i];
  }
  if (canonical_less(out[1], out[0])) std::swap(out[0], out[1]);
  out[2] = d[odd_one];
  return out;
}

AdmissibleTriple canonicalize(i64 d1, i64 d2) {
  const auto t = AdmissibleTriple::from_pair(d1, d2);
  const auto c = canonical_order(t.values());
  return AdmissibleTriple::from_pair(c[0], c[1]);
}

namespace {

// Shared driver: walks m = sqrt|d1 d2 d3| and every ordered triple whose
// three pairwise-coprime parts multiply to m.
template <class Keep>
void walk_ordered(u64 x, Partition part, const Keep& keep, const TripleVisitor& visit) {
  if (part.count < 1 || part.index < 0 || part.index >= part.count) {
    throw std::invalid_argument("invalid partition");
  }
  const u64 mmax = isqrt(x);
  if (mmax < 2) return;
  const LpfSieve sieve(mmax);
  std::vector<i64> primes;
  std::vector<int> slot;
  std::array<std::vector<i64>, 3> odd;
  for (u64 m = 2 + static_cast<u64>(part.index); m <= mmax; m += static_cast<u64>(part.count)) {
    if (!sieve.squarefree_primes(m, primes)) continue;
    const std::size_t k = primes.size();
    slot.assign(k, 0);
    // Each prime goes to A (d1, d3), B (d2, d3) or C (d1, d2).
    while (true) {
      i64 a = 1, b = 1, c = 1;
      for (std::size_t i = 0; i < k; ++i) {
        (slot[i] == 0 ? a : slot[i] == 1 ? b : c) *= primes[i];
      }
      for (const auto& s : kAllSignPairs) {
        const std::array<i64, 3> d{s.e1 * a * c, s.e2 * b * c, s.e1 * s.e2 * a * b};
        if (d[0] == 1 || d[1] == 1 || d[2] == 1) continue;
        const int h = type_from_residues(d[0], d[1], d[2]);
        if (static_cast<u128>(m) * m * static_cast<u128>(kTau[h]) > x) continue;
        if (!keep(d, h)) continue;
        for (auto& v : odd) v.clear();
        for (std::size_t i = 0; i < k; ++i) {
          if (primes[i] == 2) continue;
          if (slot[i] != 1) odd[0].push_back(primes[i]);
          if (slot[i] != 0) odd[1].push_back(primes[i]);
          if (slot[i] != 2) odd[2].push_back(primes[i]);
        }
        visit(AdmissibleTriple(SquarefreeInt(d[0], odd[0]), SquarefreeInt(d[1], odd[1]),
                               SquarefreeInt(d[2], odd[2])));
      }
      std::size_t i = 0;
      while (i < k && slot[i] == 2) slot[i++] = 0;
      if (i == k) break;
      ++slot[i];
    }
  }
}

}  // namespace

void for_each_field(u64 x, const TripleVisitor& visit, Partition part) {
  walk_ordered(
      x, part, [](const std::array<i64, 3>& d, int) { return canonical_order(d) == d; }, visit);
}

std::vector<AdmissibleTriple> enumerate_fields(u64 x) {
  std::vector<AdmissibleTriple> out;
  for_each_field(x, [&](const AdmissibleTriple& t) { out.push_back(t); });
  return out;
}

void for_each_ordered(u64 x, int h, SignPair sigma, const TripleVisitor& visit, Partition part) {
  if (h < 1 || h > 4) throw std::invalid_argument("type h must be in 1..4");
  index_of(sigma);
  walk_ordered(
      x, part,
      [&](const std::array<i64, 3>& d, int type) {
        if (type != h || sign_of(d[0]) != sigma.e1 || sign_of(d[1]) != sigma.e2) return false;
        const int r1 = mod4(d[0]), r2 = mod4(d[1]);
        switch (h) {
          case 2:
          case 4:
            return r1 == 2 && r2 == 2;
          case 3:
            return r1 == 3 && r2 == 3;
          default:
            return true;
        }
      },
      visit);
}

std::vector<AdmissibleTriple> enumerate_ordered(u64 x, int h, SignPair sigma) {
  std::vector<AdmissibleTriple> out;
  for_each_ordered(x, h, sigma, [&](const AdmissibleTriple& t) { out.push_back(t); });
  return out;
}

}  // namespace biquad
