#pragma once

// Exact rational arithmetic helpers shared by every money and usage path.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace vsecon {

__extension__ typedef __int128 WideInt;

// Normalised fraction of two int64 values (denominator > 0, lowest terms).
// Intermediates are computed in 128 bits; a result that does not fit
// int64 after reduction throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<WideInt>(a.num_) * b.den_ <=> static_cast<WideInt>(b.num_) * a.den_;
  }

 private:
  static Rational reduce(WideInt num, WideInt den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a non-negative or negative decimal literal ("12", "0.5", "-3.25")
/// into an exact rational. Throws std::invalid_argument on malformed text.
Rational parse_decimal(std::string_view text);

/// Exact decimal rendering; empty when the expansion does not terminate
/// (denominator has a prime factor other than 2 or 5).
std::optional<std::string> exact_decimal(const Rational& r);

/// Decimal rendering rounded half-to-even to `places` digits.
std::string rounded_decimal(const Rational& r, int places);

/// floor / ceiling / round-half-even to integer.
std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);
std::int64_t round_half_even(const Rational& r);

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

std::string to_string(const Rational& r);

}  // namespace vsecon
