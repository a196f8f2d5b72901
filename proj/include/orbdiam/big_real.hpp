#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace orbdiam {

// A nonnegative real carried as its base-2 logarithm, so that values like
// 2^(22 d^3) stay representable. Zero is log2 = -inf. Integers that fit in
// 64 bits also keep their exact value, and two exact values compare exactly.
class BigReal {
 public:
  BigReal() : log2_(-std::numeric_limits<double>::infinity()), exact_(0) {}

  static BigReal from_log2(double log2_value) { return BigReal(log2_value, std::nullopt); }
  static BigReal from_value(double value);
  static BigReal from_integer(std::uint64_t n);
  static BigReal infinity() { return from_log2(std::numeric_limits<double>::infinity()); }

  double log2() const { return log2_; }
  const std::optional<std::uint64_t>& exact() const { return exact_; }
  bool is_zero() const { return exact_ == 0u || (std::isinf(log2_) && log2_ < 0); }
  bool is_infinite() const { return std::isinf(log2_) && log2_ > 0; }
  double value() const;
  // Decimal digits of the integer part (1 for values below 10).
  double decimal_digits() const;

  BigReal operator*(const BigReal& o) const;
  BigReal operator/(const BigReal& o) const { return from_log2(log2_ - o.log2_); }
  BigReal pow(double exponent) const { return from_log2(log2_ * exponent); }

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b) { return (a <=> b) == 0; }

  // Decimal rendering when small, otherwise "2^<log2>".
  std::string to_string() const;

 private:
  BigReal(double l, std::optional<std::uint64_t> exact) : log2_(l), exact_(exact) {}
  double log2_;
  std::optional<std::uint64_t> exact_;
};

}  // namespace orbdiam
