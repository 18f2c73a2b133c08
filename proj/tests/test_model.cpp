#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vsecon/model.hpp"

using namespace vsecon;

TEST_CASE("money_per_period examples") {
  const PricingModel pricing;
  const Money cent = Money::from_cents(1);
  CHECK(money_per_period(cent, 24, 1000, pricing) == Money::from_dollars(87'600));
  CHECK(money_per_period(cent, 24, 0, pricing) == Money{});
  CHECK(money_per_period(cent, 12, 400, pricing) == Money::from_dollars(17'520));
}

TEST_CASE("money_per_period matches hour-by-hour summation") {
  const PricingModel pricing;
  for (std::int64_t hours : {0, 1, 12, 24}) {
    for (std::int64_t units : {0, 1, 7, 11}) {
      const std::int64_t expected = oracle::summed_line_item(1'000, hours, units, 3, pricing.period_days);
      CHECK(money_per_period(Money::from_cents(1), hours, units * 3, pricing).milli_cents() == expected);
    }
  }
}

TEST_CASE("money_per_period rejects out-of-range inputs") {
  const PricingModel pricing;
  CHECK_THROWS_AS(money_per_period(Money::from_cents(1), 25, 1, pricing), DomainError);
  CHECK_THROWS_AS(money_per_period(Money::from_cents(1), Rational(-1, 2), 1, pricing), DomainError);
  CHECK_THROWS_AS(money_per_period(Money::from_cents(1), 1, -1, pricing), DomainError);
}

TEST_CASE("money_per_period is linear in units and hours") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> units(0, 500);
  std::uniform_int_distribution<std::int64_t> num(0, 96);
  PricingModel pricing;
  pricing.vm_core_rate = Money::from_milli_cents(1'240);
  for (int i = 0; i < 500; ++i) {
    const Rational h1(num(rng), 8);
    const Rational h2(num(rng), 8);
    if (h1 + h2 > 24) continue;
    const std::int64_t u1 = units(rng);
    const std::int64_t u2 = units(rng);
    const Money rate = pricing.vm_core_rate;
    REQUIRE(money_per_period(rate, h1, u1 + u2, pricing) ==
            money_per_period(rate, h1, u1, pricing) + money_per_period(rate, h1, u2, pricing));
    REQUIRE(money_per_period(rate, h1 + h2, u1, pricing) ==
            money_per_period(rate, h1, u1, pricing) + money_per_period(rate, h2, u1, pricing));
  }
}

TEST_CASE("tenant_weight is VM count over two") {
  CHECK(tenant_weight({"a", 2, 0}) == 1);
  CHECK(tenant_weight({"a", 1, 0}) == Rational(1, 2));
  CHECK(tenant_weight({"a", 4, 0}) == 2);
}

TEST_CASE("type invariants") {
  PricingModel p;
  p.validate();
  CHECK(p.vm_core_rate == Money::from_cents(1));
  CHECK(p.server_capital_cost == Money::from_dollars(2000));
  CHECK(p.period_days == 365);
  p.period_days = 0;
  CHECK_THROWS_AS(p.validate(), DomainError);

  ServerSpec s;
  CHECK(s.total_cores == 12);
  CHECK(s.nic.vswitch_vms_per_pf == 21);
  s.nic.pf_count = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);

  CHECK_THROWS_AS((TenantSpec{"t", 0, 0}.validate()), DomainError);
  CHECK_THROWS_AS((TenantSpec{"t", 1, Rational(101, 100)}.validate()), DomainError);

  FleetScenario f;
  CHECK(f.fleet_vswitch_utilization == Rational(1, 2));
  f.server_count = -1;
  CHECK_THROWS_AS(f.validate(), DomainError);
}

TEST_CASE("policy names") {
  for (auto p : kAllPolicies) CHECK(parse_policy(policy_name(p)) == p);
  CHECK(parse_policy("1") == AllocationPolicy::SharedVswitchCore);
  CHECK_FALSE(parse_policy("4").has_value());
}
