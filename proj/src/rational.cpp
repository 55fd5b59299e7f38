#include "modcyc/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "modcyc/errors.hpp"

namespace modcyc {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw ContractViolation("rational overflow");
  }
  return static_cast<std::int64_t>(value);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw ContractViolation("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ContractViolation("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw ParseError("bad decimal: '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    std::int64_t f = parse_int(frac);
    if (f < 0) throw ParseError("bad decimal: '" + std::string(text) + "'");
    Rational r = make(static_cast<Wide>(w) * scale + f, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor_times(std::int64_t value) const {
  Wide prod = static_cast<Wide>(num_) * value;
  Wide q = prod / den_;
  if (prod % den_ != 0 && prod < 0) --q;
  return narrow(q);
}

std::int64_t Rational::floor() const { return floor_times(1); }

std::int64_t Rational::ceil() const {
  std::int64_t f = floor();
  return (static_cast<Wide>(f) * den_ == num_) ? f : f + 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ContractViolation("division by zero rational");
  return make(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool below_ratio(std::int64_t count, const Rational& alpha, std::int64_t size) {
  return static_cast<Wide>(count) * alpha.den() < static_cast<Wide>(alpha.num()) * size;
}

}  // namespace modcyc
