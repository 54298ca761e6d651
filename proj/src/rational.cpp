#include "gsb/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "gsb/errors.hpp"

namespace gsb {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw InputError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw InputError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (neg) ip.remove_prefix(1);
    if (fp.size() > 18) throw InputError("too many decimal places: '" + std::string(text) + "'");
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
    if (frac < 0 || whole < 0) throw InputError("not a rational number: '" + std::string(text) + "'");
    __int128 scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    __int128 num = static_cast<__int128>(whole) * scale + frac;
    return from_wide(neg ? -num : num, scale);
  }
  return Rational(parse_int(s, text));
}

std::int64_t Rational::floor() const noexcept {
  return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Rational::ceil() const noexcept {
  return static_cast<std::int64_t>(-floor_div(-static_cast<__int128>(num_), den_));
}

std::int64_t Rational::floor_times(std::int64_t k) const {
  return static_cast<std::int64_t>(floor_div(static_cast<__int128>(num_) * k, den_));
}

std::int64_t Rational::ceil_times(std::int64_t k) const {
  return static_cast<std::int64_t>(-floor_div(-static_cast<__int128>(num_) * k, den_));
}

Rational Rational::pow(unsigned e) const {
  Rational result(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("rational division by zero");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gsb
