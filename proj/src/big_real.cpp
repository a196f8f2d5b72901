#include "orbdiam/big_real.hpp"

#include <cstdio>

#include "orbdiam/errors.hpp"

namespace orbdiam {

BigReal BigReal::from_value(double value) {
  if (std::isnan(value) || value < 0) throw InvalidInput("BigReal: value must be a nonnegative real");
  if (value == 0) return BigReal();
  if (value < 0x1p63 && value == std::floor(value)) return from_integer(static_cast<std::uint64_t>(value));
  return from_log2(std::log2(value));
}

BigReal BigReal::from_integer(std::uint64_t n) {
  if (n == 0) return BigReal();
  return BigReal(std::log2(static_cast<double>(n)), n);
}

double BigReal::value() const {
  if (exact_) return static_cast<double>(*exact_);
  return std::exp2(log2_);
}

double BigReal::decimal_digits() const {
  if (is_zero() || log2_ < std::log2(10.0)) return 1;
  if (exact_) return std::floor(std::log10(static_cast<double>(*exact_))) + 1;
  return std::floor(log2_ * std::log10(2.0)) + 1;
}

BigReal BigReal::operator*(const BigReal& o) const {
  if (exact_ && o.exact_) {
    unsigned __int128 prod = static_cast<unsigned __int128>(*exact_) * *o.exact_;
    if (prod <= std::numeric_limits<std::uint64_t>::max()) return from_integer(static_cast<std::uint64_t>(prod));
  }
  if (is_zero() || o.is_zero()) return BigReal();
  return from_log2(log2_ + o.log2_);
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (a.exact_ && b.exact_) return *a.exact_ <=> *b.exact_;
  return a.log2_ <=> b.log2_;
}

std::string BigReal::to_string() const {
  char buf[64];
  if (exact_) {
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(*exact_));
  } else if (is_infinite()) {
    return "inf";
  } else if (log2_ < 53) {
    std::snprintf(buf, sizeof buf, "%.6g", value());
  } else {
    std::snprintf(buf, sizeof buf, "2^%.6f", log2_);
  }
  return buf;
}

}  // namespace orbdiam
