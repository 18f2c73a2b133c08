#include "vsecon/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace vsecon {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_mul10(std::int64_t v) {
  if (v > kMax / 10) throw std::invalid_argument("decimal literal out of range");
  return v * 10;
}

std::string digits_with_point(std::int64_t scaled, int places) {
  bool negative = scaled < 0;
  std::string digits = std::to_string(negative ? -scaled : scaled);
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

WideInt gcd128(WideInt a, WideInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    WideInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) { *this = reduce(num, den); }

Rational Rational::reduce(WideInt num, WideInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  WideInt g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr WideInt lo = std::numeric_limits<std::int64_t>::min();
  constexpr WideInt hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<WideInt>(a.num_) * b.den_ + static_cast<WideInt>(b.num_) * a.den_,
                          static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<WideInt>(a.num_) * b.num_, static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::reduce(static_cast<WideInt>(a.num_) * b.den_, static_cast<WideInt>(a.den_) * b.num_);
}

Rational Rational::operator-() const { return reduce(-static_cast<WideInt>(num_), den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed number: " + std::string(text));
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("malformed number: " + std::string(text));
    seen_digit = true;
    num = checked_mul10(num);
    if (num > kMax - (c - '0')) throw std::invalid_argument("decimal literal out of range");
    num += c - '0';
    if (seen_point) den = checked_mul10(den);
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: " + std::string(text));
  return Rational(negative ? -num : num, den);
}

std::optional<std::string> exact_decimal(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  int places = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  std::int64_t scaled = r.numerator() * (scale / r.denominator());
  return digits_with_point(scaled, places);
}

std::string rounded_decimal(const Rational& r, int places) {
  std::int64_t scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  return digits_with_point(round_half_even(r * scale), places);
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) {
  std::int64_t f = floor_of(r);
  return is_integral(r) ? f : f + 1;
}

std::int64_t round_half_even(const Rational& r) {
  std::int64_t f = floor_of(r);
  Rational frac = r - f;
  Rational half(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  return (f % 2 == 0) ? f : f + 1;
}

std::string to_string(const Rational& r) {
  if (is_integral(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace vsecon
