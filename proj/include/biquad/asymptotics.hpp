#pragma once

// Euler-product constants kappa0 and lambda0, the assembled leading
// constants K^sigma(G), and the predicted main terms for B(X) and B(X; G).

#include <boost/rational.hpp>

#include "biquad/arith.hpp"
#include "biquad/fields.hpp"
#include "biquad/weights.hpp"

namespace biquad {

using Rational = boost::rational<std::int64_t>;

inline constexpr u64 kDefaultPrimeBound = 10'000'000;

struct EulerProduct {
  double value = 0;
  /// |true value - value| <= tail_bound.
  double tail_bound = 0;
  u64 prime_bound = 0;
};

/// prod_{p <= P} (1 - 1/p)^a (1 + c/p), optionally over odd p only, with a
/// rigorous bound for the omitted primes. Requires a == c (otherwise the
/// product diverges or vanishes) and every factor positive.
EulerProduct euler_product(Rational a, Rational c, u64 prime_bound, bool odd_only = false);

/// prod (1 - 1/p)^{3/2} (1 + 3/(2p)).
EulerProduct kappa_kernel(u64 prime_bound = kDefaultPrimeBound);
/// prod (1 - 1/p)^3 (1 + 3/p).
EulerProduct lambda_kernel(u64 prime_bound = kDefaultPrimeBound);

/// Kernels evaluated once and shared by the constant functions below.
struct Constants {
  EulerProduct kappa_kernel;
  EulerProduct lambda_kernel;
  /// (1/2) G(1) / 8 with G over odd primes; equals lambda0.
  EulerProduct lambda_odd_kernel;
  double kappa0 = 0;
  double lambda0 = 0;
  double lambda0_odd_form = 0;
};

Constants compute_constants(u64 prime_bound = kDefaultPrimeBound);

/// 8/(7 sqrt(pi)) times the kappa kernel; (1/5) times the lambda kernel.
double kappa0(u64 prime_bound = kDefaultPrimeBound);
double lambda0(u64 prime_bound = kDefaultPrimeBound);

/// K_h^sigma(G) = kappa0 S_h^sigma(G) / (64 m_h sqrt(2 T_h)) as the exact
/// rational r with K_h^sigma(G) = r kappa0 / sqrt(2).
Rational k_coefficient_h(Group g, SignPair sigma, int h);
Rational k_coefficient(Group g, SignPair sigma);
double k_constant(Group g, SignPair sigma, const Constants& c);

/// c^sigma(G) as stated in closed form (25/168, 0, 33/56, 33/28).
Rational c_closed_form(Group g, Signature s);
/// c^sigma(G) assembled from the S-tables: (8/7) times the sum of
/// k_coefficient over the sign pairs of the signature.
Rational c_assembled(Group g, Signature s);

/// Sign pairs belonging to a signature: (+,+) real, the other three complex.
std::vector<SignPair> sign_pairs_of(Signature s);

/// lambda0 S_h^sigma / (32 m_h sqrt(T_h)) / lambda0 as an exact rational.
Rational b_coefficient_h(SignPair sigma, int h);
/// Sum over h; 23/768 for every sigma.
Rational b_coefficient(SignPair sigma);
/// c^+ = 1/4, c^- = 3/4.
Rational c_biquad(Signature s);

/// c^sigma(G)/sqrt(2 pi) sqrt(X) (log X)^{1/2} times the kappa kernel.
double predict_BG(double X, Group g, Signature s, const Constants& c);
/// Per-type share: sum over sign pairs of K_h^sigma(G) sqrt(X) (log X)^{1/2}.
double predict_BG_h(double X, Group g, Signature s, int h, const Constants& c);
/// (23 c^sigma / 960) sqrt(X) (log X)^2 times the lambda kernel.
double predict_B(double X, Signature s, const Constants& c);
double predict_B_h(double X, Signature s, int h, const Constants& c);

}  // namespace biquad
