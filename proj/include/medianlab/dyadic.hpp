#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace medianlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact dyadic rational num / 2^exp. Normalized so that exp >= 0 and num is
// odd (or num == 0 and exp == 0). No floating point is involved anywhere;
// numerators are arbitrary-precision.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long long value) : num_(value), exp_(0) {}  // NOLINT: implicit integers are intended
  Dyadic(BigInt numerator, int exponent);            // normalizes

  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  // Largest integer <= value, and value - floor(value) in [0, 1).
  BigInt floor() const;
  Dyadic frac() const;

  // Multiplication by 2^shift (shift may be negative); always exact.
  Dyadic mul_pow2(int shift) const;

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::size_t hash() const;
  Rational to_rational() const;

  // "k" for integers, "p/2^e" otherwise.
  std::string str() const;

 private:
  BigInt num_;
  int exp_;
};

}  // namespace medianlab
