#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gsb {

/// Exact fraction num/den with den > 0, always in lowest terms.
///
/// Radii and rates are carried as rationals so that integer thresholds
/// such as floor(p*n) are computed without floating-point drift.
/// Arithmetic is done in 128-bit intermediates and throws InputError if the
/// reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  /// Accepts "a/b", integers, and finite decimals ("0.25" -> 1/4).
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// floor(this * k) and ceil(this * k) without forming the product as a Rational.
  std::int64_t floor_times(std::int64_t k) const;
  std::int64_t ceil_times(std::int64_t k) const;

  Rational pow(unsigned e) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gsb
