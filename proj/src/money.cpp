#include "vsecon/money.hpp"

#include <stdexcept>

namespace vsecon {

Money Money::exact(const Rational& milli_cents) {
  if (!is_integral(milli_cents))
    throw std::domain_error("amount " + to_string(milli_cents) + " is not a whole milli-cent");
  return Money(milli_cents.numerator());
}

Money Money::rounded(const Rational& milli_cents) {
  return Money(round_half_even(milli_cents));
}

Money Money::parse_dollars(std::string_view text) {
  return exact(parse_decimal(text) * kPerDollar);
}

Money Money::parse_cents(std::string_view text) {
  return exact(parse_decimal(text) * kPerCent);
}

std::string Money::dollars_string() const {
  // kPerDollar is 10^5 so the expansion always terminates.
  return *exact_decimal(Rational(mc_, kPerDollar));
}

}  // namespace vsecon
