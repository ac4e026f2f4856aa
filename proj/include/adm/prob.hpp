#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "adm/errors.hpp"

namespace adm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Strictly interior probability, kept as an exact reduced rational.
class Prob {
public:
  explicit Prob(Rational value) : value_(std::move(value)) {
    if (value_ <= 0 || value_ >= 1) {
      throw DomainError("probability must lie strictly inside (0,1)");
    }
  }

  // Parses a plain decimal string ("0.3" -> 3/10) with no binary rounding.
  static Prob from_decimal(std::string_view text) {
    if (text.empty()) throw DomainError("empty probability string");
    BigInt digits = 0;
    BigInt scale = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char ch : text) {
      if (ch == '.') {
        if (seen_dot) throw DomainError("malformed decimal: " + std::string(text));
        seen_dot = true;
      } else if (ch >= '0' && ch <= '9') {
        digits = digits * 10 + (ch - '0');
        if (seen_dot) scale *= 10;
        seen_digit = true;
      } else {
        throw DomainError("malformed decimal: " + std::string(text));
      }
    }
    if (!seen_digit) throw DomainError("malformed decimal: " + std::string(text));
    return Prob(Rational(digits, scale));
  }

  const Rational& value() const { return value_; }

  Rational complement() const { return Rational(1) - value_; }

  // Nearest F-bit fraction round(p * 2^F), clamped away from the boundary.
  std::uint64_t quantize(unsigned f_bits) const {
    if (f_bits == 0 || f_bits > 63) throw DomainError("quantization width out of range");
    BigInt ceiling = BigInt(1) << f_bits;
    Rational scaled = value_ * Rational(ceiling);
    BigInt rounded = BigInt(scaled + Rational(1, 2));  // truncation of x + 1/2
    if (rounded < 1) rounded = 1;
    if (rounded > ceiling - 1) rounded = ceiling - 1;
    return rounded.convert_to<std::uint64_t>();
  }

  bool operator==(const Prob& other) const { return value_ == other.value_; }

private:
  Rational value_;
};

}  // namespace adm
