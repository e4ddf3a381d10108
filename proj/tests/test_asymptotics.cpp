#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "biquad/asymptotics.hpp"

using namespace biquad;

namespace {

const Constants& constants() {
  static const Constants c = compute_constants(kDefaultPrimeBound);
  return c;
}

// Direct product in double precision, no logarithms.
double naive_product(double a, double c, u64 P) {
  double v = 1;
  for (u64 p : primes_up_to(P)) v *= std::pow(1 - 1.0 / p, a) * (1 + c / p);
  return v;
}

}  // namespace

TEST(EulerProduct, RejectsDivergentParameters) {
  EXPECT_THROW(euler_product(Rational(1), Rational(2), 1000), std::invalid_argument);
  EXPECT_THROW(euler_product(Rational(-3), Rational(-3), 1000), std::invalid_argument);
  EXPECT_THROW(euler_product(Rational(3), Rational(3), 1), std::invalid_argument);
}

TEST(EulerProduct, MatchesNaiveProduct) {
  for (u64 P : {100ULL, 10'000ULL}) {
    EXPECT_NEAR(kappa_kernel(P).value, naive_product(1.5, 1.5, P), 1e-12);
    EXPECT_NEAR(lambda_kernel(P).value, naive_product(3, 3, P), 1e-12);
  }
}

TEST(EulerProduct, TailBoundHolds) {
  const auto full = kappa_kernel(10'000'000);
  for (u64 P : {100ULL, 1000ULL, 100'000ULL}) {
    const auto part = kappa_kernel(P);
    EXPECT_LE(std::abs(part.value - full.value), part.tail_bound + full.tail_bound) << P;
    const auto lpart = lambda_kernel(P);
    EXPECT_LE(std::abs(lpart.value - constants().lambda_kernel.value),
              lpart.tail_bound + constants().lambda_kernel.tail_bound);
  }
  EXPECT_LT(constants().kappa_kernel.tail_bound, 1e-6);
  EXPECT_LT(constants().lambda_kernel.tail_bound, 1e-6);
  EXPECT_LT(kappa_kernel(1'000'000).tail_bound, kappa_kernel(1000).tail_bound);
}

TEST(Kappa0, StabilizesAndPositive) {
  EXPECT_LT(std::abs(kappa0(1'000'000) - kappa0(10'000'000)), 1e-5);
  EXPECT_GT(constants().kappa0, 0);
  EXPECT_GT(constants().lambda0, 0);
}

TEST(Lambda0, TwoPaths) {
  EXPECT_NEAR(constants().lambda0, constants().lambda0_odd_form, 1e-9);
  EXPECT_NEAR(constants().lambda_kernel.value / 5, constants().lambda_odd_kernel.value / 16, 1e-9);
}

TEST(KConstant, ClosedForms) {
  EXPECT_EQ(k_coefficient(Group::Q8, {1, 1}), Rational(25, 192));
  EXPECT_EQ(k_coefficient(Group::D4, {1, 1}), Rational(33, 64));
  EXPECT_EQ(k_coefficient(Group::D4, {1, -1}), Rational(31, 96));
  EXPECT_EQ(k_coefficient(Group::D4, {-1, 1}), Rational(31, 96));
  EXPECT_EQ(k_coefficient(Group::D4, {-1, -1}), Rational(37, 96));
  const double k = k_constant(Group::Q8, {1, 1}, constants());
  EXPECT_NEAR(k, 25 * constants().kappa0 / (192 * std::numbers::sqrt2), 1e-15);
}

TEST(KConstant, SectorConstants) {
  const double root2pi = std::sqrt(2 * std::numbers::pi);
  const double kernel = constants().kappa_kernel.value;
  for (Group g : {Group::Q8, Group::D4}) {
    for (Signature s : {Signature::TotallyReal, Signature::TotallyComplex}) {
      EXPECT_EQ(c_assembled(g, s), c_closed_form(g, s));
      double sum = 0;
      for (SignPair sigma : sign_pairs_of(s)) sum += k_constant(g, sigma, constants());
      const Rational c = c_closed_form(g, s);
      EXPECT_NEAR(sum * root2pi / kernel, static_cast<double>(c.numerator()) / c.denominator(), 1e-9);
    }
  }
  EXPECT_EQ(c_closed_form(Group::D4, Signature::TotallyComplex), Rational(33, 28));
  EXPECT_THROW(c_closed_form(Group::None, Signature::TotallyReal), std::invalid_argument);
}

TEST(Predict, BiquadraticAssembly) {
  for (SignPair s : kAllSignPairs) EXPECT_EQ(b_coefficient(s), Rational(23, 768));
  EXPECT_EQ(b_coefficient(SignPair{1, 1}) * Rational(1, 5), Rational(23, 3840));
  for (double X : {1e4, 1e8, 1e12}) {
    EXPECT_NEAR(predict_B(X, Signature::TotallyComplex, constants()) / predict_B(X, Signature::TotallyReal, constants()), 3.0,
                1e-12);
    double by_h = 0;
    for (int h = 1; h <= 4; ++h) by_h += predict_B_h(X, Signature::TotallyReal, h, constants());
    EXPECT_NEAR(by_h / predict_B(X, Signature::TotallyReal, constants()), 1.0, 1e-9);
  }
  double prev = 0;
  for (double X = 3; X < 1e12; X *= 1.7) {
    const double v = predict_B(X, Signature::TotallyReal, constants());
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_THROW(predict_B(2, Signature::TotallyReal, constants()), std::invalid_argument);
}

TEST(Predict, GroupAssembly) {
  EXPECT_EQ(predict_BG(1e6, Group::Q8, Signature::TotallyComplex, constants()), 0.0);
  for (Group g : {Group::Q8, Group::D4}) {
    for (Signature s : {Signature::TotallyReal, Signature::TotallyComplex}) {
      double by_h = 0;
      for (int h = 1; h <= 4; ++h) by_h += predict_BG_h(1e8, g, s, h, constants());
      EXPECT_NEAR(by_h, predict_BG(1e8, g, s, constants()), 1e-9 * (1 + by_h));
    }
  }
}
