#include "biquad/weights.hpp"

#include <stdexcept>

namespace biquad {

namespace {

// Characters on odd residues (any sign; only n mod 8 matters).
int m8(i64 n) { return static_cast<int>(((n % 8) + 8) % 8); }
int chi_m1(i64 n) { return m8(n) % 4 == 1 ? 1 : -1; }
int chi_2(i64 n) {
  const int r = m8(n);
  return (r == 1 || r == 7) ? 1 : -1;
}
int chi_m2(i64 n) { return chi_m1(n) * chi_2(n); }
int chi_sign(int e, i64 n) { return e > 0 ? 1 : chi_m1(n); }

int phi_mod(int a, int b, int c) { return eta(a, b + 2) * eta(b, c + 2) * eta(c, a + 2); }

void check_h(int h) {
  if (h < 1 || h > 4) throw std::invalid_argument("type h must be in 1..4");
}

int exact_div(int num, int den) {
  if (num % den != 0) throw std::logic_error("weight function is not integral");
  return num / den;
}

}  // namespace

ResidueTuple::ResidueTuple(const std::array<int, 6>& w) : w_(w) {
  for (int v : w_) {
    if (v != 1 && v != 3 && v != 5 && v != 7) throw std::invalid_argument("residues must be in {1,3,5,7}");
  }
}

ResidueTuple ResidueTuple::from_index(int index) {
  if (index < 0 || index >= kCount) throw std::invalid_argument("residue tuple index out of range");
  std::array<int, 6> w{};
  for (int k = 0; k < 6; ++k) {
    w[k] = 2 * (index & 3) + 1;
    index >>= 2;
  }
  return ResidueTuple(w);
}

int ResidueTuple::index() const {
  int idx = 0;
  for (int k = 5; k >= 0; --k) idx = idx * 4 + (w_[k] - 1) / 2;
  return idx;
}

DeltaMask::DeltaMask(const std::array<int, 6>& d) : d_(d) {
  for (int v : d_) {
    if (v != 0 && v != 1) throw std::invalid_argument("delta entries must be 0 or 1");
  }
}

bool DeltaMask::is_zero() const {
  for (int v : d_) {
    if (v) return false;
  }
  return true;
}

int f_q8(int h, const ResidueTuple& w) {
  check_h(h);
  const int w11 = w.at(1, 1), w12 = w.at(1, 2), w21 = w.at(2, 1), w22 = w.at(2, 2), w31 = w.at(3, 1),
            w32 = w.at(3, 2);
  const int W1 = m8(w11 * w12 * w31 * w32), W2 = m8(w21 * w22 * w31 * w32), W3 = m8(w11 * w12 * w21 * w22);
  const int a = chi_m1(W1), b = chi_m1(W2), c = chi_m1(W3);
  const int e = eta(W1, W2);
  const int P = phi_mod(w11, w21, w31);
  switch (h) {
    case 1:
      return exact_div((1 + a) * (1 + b) * (1 + c) * (1 + e * c) * P, 16);
    case 2:
      return exact_div((1 + c) * chi_2(w11 * w21) * (1 + e * chi_m2(W3)) * P, 4);
    case 3:
      return exact_div((1 - a) * (1 - b) * (1 + c) * (1 + e * c) * P, 16);
    default:
      return exact_div((1 - c) * chi_2(w11 * w21) * (1 + e * chi_m2(W3)) * P, 4);
  }
}

int f_d4(int h, SignPair sigma, const ResidueTuple& w) {
  check_h(h);
  index_of(sigma);
  const int e1 = sigma.e1, e2 = sigma.e2;
  const int w11 = w.at(1, 1), w12 = w.at(1, 2), w21 = w.at(2, 1), w22 = w.at(2, 2), w31 = w.at(3, 1),
            w32 = w.at(3, 2);
  const int W1 = m8(w11 * w12 * w31 * w32), W2 = m8(w21 * w22 * w31 * w32), W3 = m8(w11 * w12 * w21 * w22);
  const int a = chi_m1(W1), b = chi_m1(W2), c = chi_m1(W3);
  const int P = phi_mod(w11, w21, w31);
  const int sgn = chi_sign(e1, w21 * w31) * chi_sign(e2, w11 * w31);
  const int t = (h % 2 == 0) ? chi_2(W3) : 1;
  const int x = e1 * W1, y = e2 * W2;

  // Twice the braced sum over the three cyclic cases.
  int brace2 = 0;
  if (!(sigma == SignPair{1, -1})) brace2 += (1 + eta(x + 2, y) * t) * chi_m1(w11 * w31);
  if (!(sigma == SignPair{-1, 1})) brace2 += (1 + eta(x, y + 2) * t) * chi_m1(w21 * w31);
  if (!(sigma == SignPair{-1, -1})) brace2 += (1 + eta(x, y) * t) * chi_m1(w11 * w21);

  switch (h) {
    case 1:
      return exact_div((1 + e1 * a) * (1 + e2 * b) * (1 + e1 * e2 * c) * sgn * P * brace2, 16);
    case 2:
      return exact_div((1 + e1 * e2 * c) * sgn * chi_2(w11 * w21) * P * brace2, 4);
    case 3:
      return exact_div((1 - e1 * a) * (1 - e2 * b) * (1 + e1 * e2 * c) * sgn * P * brace2, 16);
    default:
      return exact_div((1 - e1 * e2 * c) * sgn * chi_2(w11 * w21) * P * brace2, 4);
  }
}

int f_weight(Group g, int h, SignPair sigma, const ResidueTuple& w) {
  switch (g) {
    case Group::Q8:
      return sigma == SignPair{1, 1} ? f_q8(h, w) : 0;
    case Group::D4:
      return f_d4(h, sigma, w);
    case Group::None:
      break;
  }
  throw std::invalid_argument("f_weight: group must be Q8 or D4");
}

int r_d4(int h, SignPair sigma, const DTuple& t) {
  check_h(h);
  index_of(sigma);
  const int e1 = sigma.e1, e2 = sigma.e2;
  const i64 D1 = t.big(1), D2 = t.big(2), D3 = t.big(3);
  const int p1 = psi(D1), p2 = psi(D2), p3 = psi(D3);
  int brace = 0;
  if (e1 == e2) brace -= p1 * p2;
  if (e2 > 0) brace -= p2 * p3;
  if (e1 > 0) brace -= p1 * p3;
  if (e1 > 0 && e2 > 0) brace += p1 * p2 * p3;
  const int a = chi_m1(D1) * chi_m1(D3), b = chi_m1(D2) * chi_m1(D3), c = chi_m1(D1) * chi_m1(D2);
  const int two = chi_2(D1) * chi_2(D2);
  switch (h) {
    case 1:
      return exact_div((1 + e1 * a) * (1 + e2 * b) * (1 + e1 * e2 * c) * brace, 8);
    case 2:
      return exact_div((1 + e1 * e2 * c) * (1 + two) * brace, 4);
    case 3:
      return exact_div((1 - e1 * a) * (1 - e2 * b) * (1 + e1 * e2 * c) * brace, 8);
    default:
      return exact_div((1 - e1 * e2 * c) * (1 + two) * brace, 4);
  }
}

int Y(const ResidueTuple& w, const DeltaMask& delta) {
  int y = 0;
  if (w.at(1, 1) == 1 && w.at(2, 1) == 1 && w.at(3, 1) == 1 && !delta.at(1, 2) && !delta.at(2, 2) &&
      !delta.at(3, 2)) {
    ++y;
  }
  if (w.at(1, 2) == 1 && w.at(2, 2) == 1 && w.at(3, 2) == 1 && !delta.at(1, 1) && !delta.at(2, 1) &&
      !delta.at(3, 1)) {
    ++y;
  }
  return y;
}

int s_table(Group g, SignPair sigma, int h) {
  check_h(h);
  int total = 0;
  for (int i = 0; i < ResidueTuple::kCount; ++i) {
    const auto w = ResidueTuple::from_index(i);
    const int y = Y(w);
    if (y) total += f_weight(g, h, sigma, w) * y;
  }
  return total;
}

int f_biquad(int h, SignPair sigma, const std::array<int, 3>& w) {
  check_h(h);
  index_of(sigma);
  for (int v : w) {
    if (v != 1 && v != 3) throw std::invalid_argument("residues must be in {1,3}");
  }
  const int e1 = sigma.e1, e2 = sigma.e2;
  const int a = chi_m1(w[0] * w[2]), b = chi_m1(w[1] * w[2]), c = chi_m1(w[0] * w[1]);
  switch (h) {
    case 1:
      return exact_div((1 + e1 * a) * (1 + e2 * b) * (1 + e1 * e2 * c), 8);
    case 2:
      return exact_div(1 + e1 * e2 * c, 2);
    case 3:
      return exact_div((1 - e1 * a) * (1 - e2 * b) * (1 + e1 * e2 * c), 8);
    default:
      return exact_div(1 - e1 * e2 * c, 2);
  }
}

int s_table_biquad(SignPair sigma, int h) {
  int total = 0;
  for (int w1 : {1, 3})
    for (int w2 : {1, 3})
      for (int w3 : {1, 3}) total += f_biquad(h, sigma, {w1, w2, w3});
  return total;
}

std::vector<Dyadic> g_w_all(u64 x, const DeltaMask& delta) {
  if (x < 1) throw std::invalid_argument("g_w: x must be >= 1");
  const u64 nmax = isqrt(x);
  constexpr int kMaxOmega = 16;
  // by_omega[w][k]: sum of Psi g over tuples with omega = k.
  std::vector<std::array<i64, kMaxOmega>> by_omega(ResidueTuple::kCount);
  for (auto& a : by_omega) a.fill(0);

  const LpfSieve sieve(nmax < 2 ? 2 : nmax);
  std::vector<i64> primes;
  std::vector<int> slot;
  std::array<i64, 6> D{};
  for (u64 n = 1; n <= nmax; n += 2) {
    if (n == 1) {
      primes.clear();
    } else if (!sieve.squarefree_primes(n, primes)) {
      continue;
    }
    const std::size_t k = primes.size();
    slot.assign(k, 0);
    while (true) {
      D.fill(1);
      for (std::size_t i = 0; i < k; ++i) D[slot[i]] *= primes[i];
      bool keep = true;
      for (std::size_t i = 0; i < k && keep; ++i) {
        if (primes[i] % 4 == 3 && delta.values()[slot[i]]) keep = false;
      }
      if (keep) {
        int idx = 0;
        for (int s = 5; s >= 0; --s) idx = idx * 4 + static_cast<int>((D[s] & 7) - 1) / 2;
        const int g = kronecker(D[3], D[0]) * kronecker(D[5], D[0]) * kronecker(D[1], D[2]) *
                      kronecker(D[5], D[2]) * kronecker(D[1], D[4]) * kronecker(D[3], D[4]);
        by_omega[idx][k] += g;
      }
      std::size_t i = 0;
      while (i < k && slot[i] == 5) slot[i++] = 0;
      if (i == k) break;
      ++slot[i];
    }
  }

  std::vector<Dyadic> out(ResidueTuple::kCount);
  for (int w = 0; w < ResidueTuple::kCount; ++w) {
    Dyadic sum;
    for (int j = 0; j < kMaxOmega; ++j) {
      if (by_omega[w][j]) sum += Dyadic(by_omega[w][j], j);
    }
    out[w] = sum;
  }
  return out;
}

Dyadic g_w_direct(u64 x, const ResidueTuple& w, const DeltaMask& delta) {
  return g_w_all(x, delta)[w.index()];
}

}  // namespace biquad
