#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "vsecon/rational.hpp"

namespace vsecon {

// Integer milli-cents. 1 dollar = 100 cents = 100'000 milli-cents.
class Money {
 public:
  static constexpr std::int64_t kPerCent = 1'000;
  static constexpr std::int64_t kPerDollar = 100'000;

  constexpr Money() = default;

  static constexpr Money from_milli_cents(std::int64_t mc) { return Money(mc); }
  static constexpr Money from_cents(std::int64_t cents) { return Money(cents * kPerCent); }
  static constexpr Money from_dollars(std::int64_t dollars) { return Money(dollars * kPerDollar); }

  // Exact conversion; throws std::domain_error when the value is not a whole
  // number of milli-cents.
  static Money exact(const Rational& milli_cents);
  // Rounds half-to-even to the nearest milli-cent.
  static Money rounded(const Rational& milli_cents);

  // "87600", "100214.4", "-0.00001". Shortest exact decimal in dollars.
  static Money parse_dollars(std::string_view text);
  static Money parse_cents(std::string_view text);

  constexpr std::int64_t milli_cents() const { return mc_; }
  Rational as_rational() const { return Rational(mc_); }

  std::string dollars_string() const;

  constexpr Money operator+(Money o) const { return Money(mc_ + o.mc_); }
  constexpr Money operator-(Money o) const { return Money(mc_ - o.mc_); }
  constexpr Money operator-() const { return Money(-mc_); }
  constexpr Money operator*(std::int64_t k) const { return Money(mc_ * k); }
  Money& operator+=(Money o) { mc_ += o.mc_; return *this; }
  Money& operator-=(Money o) { mc_ -= o.mc_; return *this; }

  constexpr auto operator<=>(const Money&) const = default;

 private:
  constexpr explicit Money(std::int64_t mc) : mc_(mc) {}
  std::int64_t mc_ = 0;
};

inline constexpr Money operator*(std::int64_t k, Money m) { return m * k; }

}  // namespace vsecon
