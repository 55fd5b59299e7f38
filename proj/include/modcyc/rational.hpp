#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace modcyc {

/// Exact rational number with a positive denominator, always in lowest terms.
///
/// Expansion thresholds and schedule parameters are compared through this type
/// so that `|N(X)| < alpha |X|` is decided without rounding.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "P/Q", an integer "P", or a plain decimal such as "0.75".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  std::string to_string() const;

  /// floor(this * value) for a non-negative integer value.
  std::int64_t floor_times(std::int64_t value) const;
  std::int64_t floor() const;
  std::int64_t ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// True iff count < alpha * size, decided exactly.
bool below_ratio(std::int64_t count, const Rational& alpha, std::int64_t size);

}  // namespace modcyc
