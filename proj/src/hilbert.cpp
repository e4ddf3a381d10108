#include "biquad/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace biquad {

namespace {

int pow_sign(int s, int e) { return (e & 1) ? s : 1; }

void require_nonzero(i64 a, i64 b) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol: arguments must be nonzero");
}

void require_valid_d(i64 d) {
  if (d == 0 || d == 1) throw std::invalid_argument("value must be squarefree and != 0, 1");
  if (!is_squarefree(d)) throw std::invalid_argument("not squarefree: " + std::to_string(d));
}

}  // namespace

Place Place::finite(i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw std::invalid_argument("Place: not a prime");
  return Place(p);
}

std::string Place::to_string() const { return is_infinite() ? std::string("inf") : std::to_string(prime_); }

int hilbert_p(i64 a, i64 b, i64 p) {
  require_nonzero(a, b);
  const int alpha = valuation(a, p);
  const int beta = valuation(b, p);
  const i64 ua = remove_p(a, p);
  const i64 ub = remove_p(b, p);
  if (p == 2) {
    return eta(ua, ub) * pow_sign(kronecker(2, ua), beta) * pow_sign(kronecker(2, ub), alpha);
  }
  return pow_sign(kronecker(-1, p), alpha * beta) * pow_sign(kronecker(ua, p), beta) *
         pow_sign(kronecker(ub, p), alpha);
}

int hilbert_inf(i64 a, i64 b) {
  require_nonzero(a, b);
  return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert(i64 a, i64 b, const Place& v) {
  return v.is_infinite() ? hilbert_inf(a, b) : hilbert_p(a, b, v.prime());
}

std::vector<Place> relevant_places(i64 a, i64 b) {
  require_nonzero(a, b);
  std::vector<i64> odd;
  for (i64 n : {a, b}) {
    for (const auto& pp : factor(n)) {
      if (pp.prime != 2) odd.push_back(pp.prime);
    }
  }
  std::sort(odd.begin(), odd.end());
  odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
  std::vector<Place> out{Place::infinity(), Place::finite(2)};
  for (i64 p : odd) out.push_back(Place::finite(p));
  return out;
}

int hilbert_product(i64 a, i64 b) {
  int prod = 1;
  for (const auto& v : relevant_places(a, b)) prod *= hilbert(a, b, v);
  return prod;
}

bool witt_equiv(i64 a, i64 b) {
  require_valid_d(a);
  require_valid_d(b);
  if (a == b) throw std::invalid_argument("witt_equiv: arguments must be distinct");
  // Places where any of the three symbols can be nontrivial.
  for (const auto& v : relevant_places(a, b)) {
    if (hilbert(a, b, v) * hilbert(a, a, v) * hilbert(b, b, v) != 1) return false;
  }
  return true;
}

}  // namespace biquad
