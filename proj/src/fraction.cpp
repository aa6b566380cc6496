#include "tpmine/fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tpmine {
namespace {

__extension__ typedef __int128 Wide;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Fraction from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) {
    throw std::overflow_error("fraction: value exceeds 64-bit range");
  }
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

// Floor division for a positive divisor.
Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::parse_decimal(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw fail();

  Wide num = 0;
  Wide den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw fail();
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
    if (den > std::numeric_limits<std::int64_t>::max() / 10 ||
        num > std::numeric_limits<std::int64_t>::max() / 10) {
      throw std::invalid_argument("decimal has too many digits: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw fail();
  return from_wide(neg ? -num : num, den);
}

double Fraction::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Fraction::to_fixed(int decimals) const {
  if (decimals < 0) decimals = 0;
  Wide scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;

  Wide n = num_;
  bool neg = n < 0;
  if (neg) n = -n;
  // round(|x| * scale) with halves going up, then reapply the sign.
  Wide scaled = (n * scale * 2 + den_) / (static_cast<Wide>(den_) * 2);

  std::string digits = wide_to_string(scaled);
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  if (neg && scaled != 0) digits.insert(digits.begin(), '-');
  return digits;
}

std::string Fraction::to_trimmed(int max_decimals) const {
  std::string s = to_fixed(max_decimals);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::int64_t Fraction::floor() const {
  return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Fraction::ceil() const {
  return -static_cast<std::int64_t>(floor_div(-static_cast<Wide>(num_), den_));
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                   static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                   static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tpmine
