#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tpmine {

/// Exact rational number with a 64-bit numerator and a positive 64-bit
/// denominator, always stored in lowest terms.
///
/// Every support, milestone and transitional ratio is kept as a Fraction so
/// that threshold tests and arg-max ties are decided without rounding. Decimal
/// text is produced only at the presentation boundary (to_fixed / to_double).
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  /// Parses a plain decimal literal ("0.05", "25", "12.5", "-3") exactly.
  /// Exponents and other notations are rejected with std::invalid_argument.
  static Fraction parse_decimal(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;

  /// Rounds half away from zero to `decimals` places.
  std::string to_fixed(int decimals) const;

  /// Like to_fixed but drops trailing zeros and a bare decimal point:
  /// 62.50 -> "62.5", 25.00 -> "25".
  std::string to_trimmed(int max_decimals) const;

  /// Smallest integer not less than the value.
  std::int64_t ceil() const;
  /// Largest integer not greater than the value.
  std::int64_t floor() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction operator-() const { return Fraction(-num_, den_); }

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tpmine
