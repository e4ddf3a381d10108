#pragma once

// Exact dyadic rationals num / 2^exp.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace biquad {

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t num, int exp = 0) : num_(num), exp_(exp) {
    if (exp < 0) throw std::invalid_argument("Dyadic: negative exponent");
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  /// Denominator is 2^exponent.
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  double to_double() const;
  std::string to_string() const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o) { return *this += Dyadic(-o.num_, o.exp_); }
  Dyadic& operator*=(const Dyadic& o);
  /// Divide by 2^k.
  Dyadic halved(int k = 1) const { return Dyadic(num_, exp_ + k); }

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num_, a.exp_); }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace biquad
