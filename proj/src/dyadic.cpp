#include "biquad/dyadic.hpp"

#include <cmath>

namespace biquad {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Dyadic: numerator overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ /= 2;
    --exp_;
  }
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  const int e = exp_ > o.exp_ ? exp_ : o.exp_;
  if (e > 100) throw std::overflow_error("Dyadic: exponent overflow");
  const i128 a = static_cast<i128>(num_) << (e - exp_);
  const i128 b = static_cast<i128>(o.num_) << (e - o.exp_);
  num_ = narrow(a + b);
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ = narrow(static_cast<i128>(num_) * o.num_);
  exp_ += o.exp_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const Dyadic d = a - b;
  return d.num_ <=> 0;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

}  // namespace biquad
