#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifair {

using BigInt = boost::multiprecision::cpp_int;

/// Weight sums. Individual weights are 64-bit, so any sum of them fits
/// comfortably in 128 bits.
using WeightSum = __int128;

std::string to_string(WeightSum v);
BigInt to_bigint(WeightSum v);

/// Thrown when a configurable resource guard (enumeration size, memory
/// budget, table size) would be exceeded. The CLI maps this to exit code 2.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact non-negative rational with big-integer numerator and denominator.
///
/// Deliberately does not reduce to lowest terms: the values handled here are
/// powers q^e of a fixed reduced ratio, whose numerator and denominator are
/// already coprime, and gcd computations on such pairs are pure overhead.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Parses "3", "0.25" or "3/4". Fractions must have a positive denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  BigInt floor() const;
  BigInt ceil() const;

  Rational pow(unsigned long exponent) const;
  double to_double() const;

  /// Decimal rendering with `digits` significant digits (round half up).
  /// Falls back to scientific notation outside a readable magnitude range.
  std::string to_decimal(int digits = 12) const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  BigInt num_;
  BigInt den_;  // always > 0
};

/// A capacity that is either a finite non-negative weight sum or infinite.
/// The infinite value compares greater than every finite one.
class ExtendedCapacity {
 public:
  constexpr ExtendedCapacity() : v_(kInf) {}

  static constexpr ExtendedCapacity infinite() { return ExtendedCapacity(); }
  static constexpr ExtendedCapacity finite(WeightSum v) {
    ExtendedCapacity c;
    c.v_ = v;
    return c;
  }

  bool is_infinite() const { return v_ == kInf; }
  WeightSum value() const {
    if (is_infinite()) throw std::logic_error("value() on infinite capacity");
    return v_;
  }

  /// Saturating add of a single item weight.
  ExtendedCapacity plus(std::int64_t w) const {
    return is_infinite() ? *this : finite(v_ + w);
  }

  friend bool operator==(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ != b.v_; }
  friend bool operator<(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtendedCapacity a, ExtendedCapacity b) { return a.v_ >= b.v_; }

  std::string str() const { return is_infinite() ? "inf" : to_string(v_); }

 private:
  static constexpr WeightSum kInf = std::numeric_limits<WeightSum>::max();
  WeightSum v_;
};

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace semifair
