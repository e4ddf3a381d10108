#include "biquad/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biquad {

namespace {

double to_double(Rational r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

// sqrt(T_h) for T = (1, 64, 16, 256).
constexpr std::array<int, 5> kSqrtT{0, 1, 8, 4, 16};

void check_h(int h) {
  if (h < 1 || h > 4) throw std::invalid_argument("type h must be in 1..4");
}

}  // namespace

EulerProduct euler_product(Rational a, Rational c, u64 prime_bound, bool odd_only) {
  if (a != c) throw std::invalid_argument("euler_product: exponent and linear coefficient must agree");
  if (prime_bound < 2) throw std::invalid_argument("euler_product: prime bound must be >= 2");
  const double ad = to_double(a), cd = to_double(c);
  const double P = static_cast<double>(prime_bound);
  if (std::fabs(cd) >= P) throw std::invalid_argument("euler_product: prime bound too small");

  long double log_sum = 0;
  for (std::uint32_t p : primes_up_to(prime_bound)) {
    if (odd_only && p == 2) continue;
    const long double x = 1.0L / p;
    if (1 + cd * x <= 0) throw std::invalid_argument("euler_product: vanishing factor");
    log_sum += ad * std::log1p(-x) + std::log1p(cd * x);
  }
  EulerProduct out;
  out.prime_bound = prime_bound;
  out.value = static_cast<double>(std::exp(log_sum));
  // For p > P: |a log(1 - 1/p) + log(1 + c/p)| <= C/p^2, and the sum of 1/p^2
  // over p > P is below 1/P.
  const double C = std::fabs(ad) / (2 * (1 - 1 / P)) + cd * cd / (2 * (1 - std::fabs(cd) / P));
  out.tail_bound = out.value * std::expm1(C / P);
  return out;
}

EulerProduct kappa_kernel(u64 prime_bound) { return euler_product(Rational(3, 2), Rational(3, 2), prime_bound); }

EulerProduct lambda_kernel(u64 prime_bound) { return euler_product(Rational(3), Rational(3), prime_bound); }

Constants compute_constants(u64 prime_bound) {
  Constants c;
  c.kappa_kernel = kappa_kernel(prime_bound);
  c.lambda_kernel = lambda_kernel(prime_bound);
  c.lambda_odd_kernel = euler_product(Rational(3), Rational(3), prime_bound, true);
  c.kappa0 = 8.0 / (7.0 * std::sqrt(std::numbers::pi)) * c.kappa_kernel.value;
  c.lambda0 = c.lambda_kernel.value / 5.0;
  c.lambda0_odd_form = 0.5 * c.lambda_odd_kernel.value / 8.0;
  return c;
}

double kappa0(u64 prime_bound) {
  return 8.0 / (7.0 * std::sqrt(std::numbers::pi)) * kappa_kernel(prime_bound).value;
}

double lambda0(u64 prime_bound) { return lambda_kernel(prime_bound).value / 5.0; }

Rational k_coefficient_h(Group g, SignPair sigma, int h) {
  check_h(h);
  return Rational(s_table(g, sigma, h), 64 * kMultiplicity[h] * kSqrtT[h]);
}

Rational k_coefficient(Group g, SignPair sigma) {
  Rational r(0);
  for (int h = 1; h <= 4; ++h) r += k_coefficient_h(g, sigma, h);
  return r;
}

double k_constant(Group g, SignPair sigma, const Constants& c) {
  return to_double(k_coefficient(g, sigma)) * c.kappa0 / std::numbers::sqrt2;
}

Rational c_closed_form(Group g, Signature s) {
  const bool real = s == Signature::TotallyReal;
  switch (g) {
    case Group::Q8:
      return real ? Rational(25, 168) : Rational(0);
    case Group::D4:
      return real ? Rational(33, 56) : Rational(33, 28);
    case Group::None:
      break;
  }
  throw std::invalid_argument("c constant: group must be Q8 or D4");
}

std::vector<SignPair> sign_pairs_of(Signature s) {
  if (s == Signature::TotallyReal) return {SignPair{1, 1}};
  return {SignPair{1, -1}, SignPair{-1, 1}, SignPair{-1, -1}};
}

Rational c_assembled(Group g, Signature s) {
  Rational r(0);
  for (SignPair sigma : sign_pairs_of(s)) r += k_coefficient(g, sigma);
  return r * Rational(8, 7);
}

Rational b_coefficient_h(SignPair sigma, int h) {
  check_h(h);
  return Rational(s_table_biquad(sigma, h), 32 * kMultiplicity[h] * kSqrtT[h]);
}

Rational b_coefficient(SignPair sigma) {
  Rational r(0);
  for (int h = 1; h <= 4; ++h) r += b_coefficient_h(sigma, h);
  return r;
}

Rational c_biquad(Signature s) { return s == Signature::TotallyReal ? Rational(1, 4) : Rational(3, 4); }

double predict_BG(double X, Group g, Signature s, const Constants& c) {
  if (X < 3) throw std::invalid_argument("prediction requires X >= 3");
  return to_double(c_closed_form(g, s)) / std::sqrt(2 * std::numbers::pi) * std::sqrt(X) *
         std::sqrt(std::log(X)) * c.kappa_kernel.value;
}

double predict_BG_h(double X, Group g, Signature s, int h, const Constants& c) {
  if (X < 3) throw std::invalid_argument("prediction requires X >= 3");
  Rational r(0);
  for (SignPair sigma : sign_pairs_of(s)) r += k_coefficient_h(g, sigma, h);
  return to_double(r) * c.kappa0 / std::numbers::sqrt2 * std::sqrt(X) * std::sqrt(std::log(X));
}

double predict_B(double X, Signature s, const Constants& c) {
  if (X < 3) throw std::invalid_argument("prediction requires X >= 3");
  const double L = std::log(X);
  return 23.0 * to_double(c_biquad(s)) / 960.0 * std::sqrt(X) * L * L * c.lambda_kernel.value;
}

double predict_B_h(double X, Signature s, int h, const Constants& c) {
  if (X < 3) throw std::invalid_argument("prediction requires X >= 3");
  Rational r(0);
  for (SignPair sigma : sign_pairs_of(s)) r += b_coefficient_h(sigma, h);
  const double L = std::log(X);
  return to_double(r) * c.lambda0 * std::sqrt(X) * L * L;
}

}  // namespace biquad
