#include "medianlab/dyadic.hpp"

#include <functional>

namespace medianlab {

Dyadic::Dyadic(BigInt numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
  // exponent < 0 means the value is an integer multiple of 2^{-exponent}
  if (exp_ < 0) {
    num_ <<= -exp_;
    exp_ = 0;
  }
}

BigInt Dyadic::floor() const {
  if (exp_ == 0) return num_;
  BigInt pow2 = BigInt(1) << exp_;
  BigInt q = num_ / pow2;  // truncates toward zero
  if (num_ < 0 && num_ % pow2 != 0) --q;
  return q;
}

Dyadic Dyadic::frac() const { return *this - Dyadic(floor(), 0); }

Dyadic Dyadic::mul_pow2(int shift) const { return Dyadic(num_, exp_ - shift); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  BigInt lhs = a.num_ << (e - a.exp_);
  BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Dyadic::hash() const {
  std::size_t h = std::hash<std::string>{}(num_.str());
  return h ^ (static_cast<std::size_t>(exp_) * 0x9e3779b97f4a7c15ULL);
}

Rational Dyadic::to_rational() const { return Rational(num_, BigInt(1) << exp_); }

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace medianlab
