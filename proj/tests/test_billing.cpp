#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vsecon/billing.hpp"

using namespace vsecon;

namespace {

Money dollars(const char* text) { return Money::parse_dollars(text); }

std::vector<TenantUsage> paper_mix() {
  return {{"t1", {1, 100}}, {"t2", {2, 100}}, {"t3", {2, 100}}, {"t4", {5, 100}}, {"t5", {10, 100}}, {"t6", {30, 100}}};
}

}  // namespace

TEST_CASE("operator revenue on the default fleet") {
  const FleetScenario s;
  SUBCASE("baseline") {
    auto r = compute_operator_revenue(s, AllocationPolicy::Baseline);
    CHECK(r.workload_income == dollars("87600"));
    CHECK(r.vswitch_income == Money{});
    CHECK(r.host_expense == dollars("17520"));
    CHECK(r.net_revenue == dollars("70080"));
  }
  SUBCASE("shared vswitch core") {
    auto r = compute_operator_revenue(s, AllocationPolicy::SharedVswitchCore);
    CHECK(r.vswitch_income == dollars("4380"));
    CHECK(r.workload_income == dollars("87600"));
    CHECK(r.host_expense == dollars("8760"));
    CHECK(r.net_revenue == dollars("83220"));
  }
  SUBCASE("tenant shared cores") {
    auto r = compute_operator_revenue(s, AllocationPolicy::TenantSharedCores);
    CHECK(r.workload_income == dollars("96360"));
    CHECK(r.net_revenue == dollars("87600"));
  }
  SUBCASE("dedicated vswitch cores") {
    auto r = compute_operator_revenue(s, AllocationPolicy::DedicatedVswitchCores);
    CHECK(r.total_income() == dollars("112741.2"));
    CHECK(r.host_expense == dollars("12526.8"));
    CHECK(r.net_revenue == dollars("100214.4"));
    CHECK(r.capital_cost == dollars("86000"));
    CHECK(r.server_count_effective == 143);
    CHECK(r.displaced_weight == 150);
    // 100 original servers earn 78,840; the 43 new ones 33,901.2.
    FleetScenario original = s;
    CHECK(compute_layout(original.server_spec, AllocationPolicy::DedicatedVswitchCores).workload_vm_count == 7);
    const std::int64_t orig_mc = oracle::summed_line_item(1000, 24, 7, 100, 365) + oracle::summed_line_item(1000, 12, 4, 100, 365);
    const std::int64_t new_mc = oracle::summed_line_item(1000, 24, 7, 43, 365) + oracle::summed_line_item(1000, 12, 4, 43, 365);
    CHECK(Money::from_milli_cents(orig_mc) == dollars("78840"));
    CHECK(Money::from_milli_cents(new_mc) == dollars("33901.2"));
    CHECK(r.total_income().milli_cents() == orig_mc + new_mc);
  }
}

TEST_CASE("empty fleet yields an all-zero report") {
  FleetScenario s;
  s.server_count = 0;
  for (auto p : kAllPolicies) {
    auto r = compute_operator_revenue(s, p);
    CHECK(r.net_revenue == Money{});
    CHECK(r.total_income() == Money{});
    CHECK(r.host_expense == Money{});
    CHECK(r.capital_cost == Money{});
    CHECK(r.server_count_effective == 0);
  }
}

TEST_CASE("revenue identity and baseline vswitch income on random scenarios") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    FleetScenario s;
    s.server_count = static_cast<std::int64_t>(rng() % 500);
    s.server_spec.total_cores = 3 + static_cast<std::int64_t>(rng() % 70);
    s.pricing.vm_core_rate = Money::from_milli_cents(1 + static_cast<std::int64_t>(rng() % 5000));
    s.pricing.host_core_cost_rate = Money::from_milli_cents(static_cast<std::int64_t>(rng() % 5000));
    s.pricing.period_days = 1 + static_cast<std::int64_t>(rng() % 400);
    s.fleet_vswitch_utilization = Rational(static_cast<std::int64_t>(rng() % 101), 100);
    for (auto p : kAllPolicies) {
      auto r = compute_operator_revenue(s, p);
      REQUIRE(r.net_revenue == r.workload_income + r.vswitch_income - r.host_expense);
      if (p == AllocationPolicy::Baseline || p == AllocationPolicy::TenantSharedCores)
        REQUIRE(r.vswitch_income == Money{});
    }
  }
}

TEST_CASE("compare_options deltas") {
  auto c = compare_options(FleetScenario{});
  REQUIRE(c.rows.size() == 4);
  REQUIRE(c.rows[0].delta_vs_baseline_percent.has_value());
  CHECK(*c.rows[0].delta_vs_baseline_percent == 0);
  CHECK(*c.rows[1].delta_vs_baseline_percent == Rational(75, 4));
  CHECK(*c.rows[2].delta_vs_baseline_percent == 25);
  CHECK(*c.rows[3].delta_vs_baseline_percent == 43);

  FleetScenario empty;
  empty.server_count = 0;
  for (const auto& row : compare_options(empty).rows) CHECK_FALSE(row.delta_vs_baseline_percent.has_value());
}

TEST_CASE("tenant bills are proportional to usage") {
  const PricingModel pricing;
  auto bills = compute_tenant_bills(paper_mix(), pricing, AllocationPolicy::SharedVswitchCore, 1);
  CHECK(bills[5].vswitch_charge == bills[4].vswitch_charge * 3);
  Money total;
  for (const auto& b : bills) total += b.vswitch_charge;
  CHECK(total == money_per_period(pricing.vm_core_rate, 12, 1, pricing));
  CHECK(total == dollars("43.8"));

  FleetScenario s;
  auto opt1 = compute_operator_revenue(s, AllocationPolicy::SharedVswitchCore);
  CHECK(total * s.server_count == opt1.vswitch_income);

  auto zero = compute_tenant_bills({{"z", 0}}, pricing, AllocationPolicy::DedicatedVswitchCores, 1);
  CHECK(zero[0].vswitch_charge == Money{});
  CHECK_THROWS_AS(compute_tenant_bills({{"x", {11, 10}}}, pricing, AllocationPolicy::SharedVswitchCore, 1), DomainError);
}

TEST_CASE("tenant bills depend on policy and basis") {
  PricingModel pricing;
  auto base = compute_tenant_bills(paper_mix(), pricing, AllocationPolicy::Baseline, 1);
  auto opt2 = compute_tenant_bills(paper_mix(), pricing, AllocationPolicy::TenantSharedCores, 1);
  for (const auto& b : base) CHECK(b.vswitch_charge == Money{});
  for (const auto& b : opt2) CHECK(b.vswitch_charge == Money{});
  pricing.vswitch_billing = VswitchBilling::CpuCycle;
  auto opt2_cycles = compute_tenant_bills(paper_mix(), pricing, AllocationPolicy::TenantSharedCores, 1);
  CHECK(opt2_cycles[5].vswitch_charge == dollars("26.28"));
  CHECK(opt2_cycles[5].basis == VswitchBilling::CpuCycle);
  auto residencies = compute_tenant_bills(paper_mix(), pricing, AllocationPolicy::DedicatedVswitchCores, 3);
  CHECK(residencies[5].vswitch_charge == dollars("26.28") * 3);
}

TEST_CASE("bills are homogeneous of degree one") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    // Multiples of 10 milli-cents keep every percent-usage bill a whole
    // milli-cent, so scaling is exact.
    PricingModel pricing;
    pricing.vm_core_rate = Money::from_milli_cents(10 * (1 + static_cast<std::int64_t>(rng() % 400)));
    const Rational u(static_cast<std::int64_t>(rng() % 51), 100);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 2);
    auto one = compute_tenant_bills({{"a", u}}, pricing, AllocationPolicy::SharedVswitchCore, 1)[0].vswitch_charge;
    auto scaled_usage = compute_tenant_bills({{"a", u * k}}, pricing, AllocationPolicy::SharedVswitchCore, 1)[0];
    REQUIRE(scaled_usage.vswitch_charge == one * k);
    PricingModel doubled = pricing;
    doubled.vm_core_rate = pricing.vm_core_rate * k;
    auto scaled_rate = compute_tenant_bills({{"a", u}}, doubled, AllocationPolicy::SharedVswitchCore, 1)[0];
    REQUIRE(scaled_rate.vswitch_charge == one * k);
  }
}

TEST_CASE("bills round to the nearest milli-cent for arbitrary rates") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    PricingModel pricing;
    pricing.vm_core_rate = Money::from_milli_cents(1 + static_cast<std::int64_t>(rng() % 4000));
    const Rational u(static_cast<std::int64_t>(rng() % 101), 100);
    const Rational exact = pricing.vm_core_rate.as_rational() * 24 * u * pricing.period_days;
    auto bill = compute_tenant_bills({{"a", u}}, pricing, AllocationPolicy::DedicatedVswitchCores, 1)[0];
    const Rational err = bill.vswitch_charge.as_rational() - exact;
    REQUIRE(err <= Rational(1, 2));
    REQUIRE(err >= Rational(-1, 2));
  }
}

TEST_CASE("bill_from_meters") {
  const PricingModel pricing;
  const CoreModel core{100, 0};
  auto saturated = bill_from_meters(schedule_dedicated_cores({{"a", {100, 100}}}, core), pricing);
  CHECK(saturated[0].usage_fraction == 1);
  CHECK(saturated[0].vswitch_charge == money_per_period(pricing.vm_core_rate, 24, 1, pricing));

  auto halves = bill_from_meters(schedule_shared_core({{"a", {50}}, {"b", {50}}}, core), pricing);
  CHECK(halves[0].vswitch_charge == halves[1].vswitch_charge);

  auto mix = bill_from_meters(schedule_shared_core({{"a", {20}}, {"b", {40}}, {"c", {80}}}, core), pricing);
  CHECK(mix[1].vswitch_charge == mix[0].vswitch_charge * 2);
  CHECK(mix[2].vswitch_charge == mix[0].vswitch_charge * 2);

  auto a = schedule_dedicated_cores({{"a", {1, 2}}}, core);
  auto b = schedule_dedicated_cores({{"b", {1, 2, 3}}}, core);
  std::vector<MeterRecord> mixed = {a[0], b[0]};
  CHECK_THROWS_AS(bill_from_meters(mixed, pricing), MeteringError);
  CHECK(bill_from_meters({}, pricing).empty());
}
