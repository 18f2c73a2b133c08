#include "vsecon/billing.hpp"

namespace vsecon {

namespace {

const Rational kFullDay{24};

Money prorated_core_rent(const PricingModel& pricing, const Rational& usage, std::int64_t residencies) {
  if (usage < 0 || usage > 1) throw DomainError("usage fraction " + to_string(usage) + " outside [0, 1]");
  return money_per_period(pricing.vm_core_rate, kFullDay * usage, residencies, pricing);
}

}  // namespace

std::int64_t billable_vswitch_cores(const ServerLayout& layout) {
  switch (layout.policy) {
    case AllocationPolicy::SharedVswitchCore:
    case AllocationPolicy::DedicatedVswitchCores:
      return layout.vswitch_dedicated_cores;
    case AllocationPolicy::Baseline:
    case AllocationPolicy::TenantSharedCores:
      // Option 2 cycles come out of cores the tenant already rents.
      return 0;
  }
  return 0;
}

RevenueReport compute_operator_revenue(const FleetScenario& scenario, AllocationPolicy policy) {
  const PricingModel& pricing = scenario.pricing;
  const ServerLayout layout = compute_layout(scenario.server_spec, policy);
  const DisplacementReport displacement = compute_displacement(scenario, policy);

  RevenueReport r;
  r.policy = policy;
  r.server_count_effective = scenario.server_count + displacement.new_servers_needed;
  r.displaced_weight = displacement.displaced_weight;
  r.new_servers = displacement.new_servers_needed;
  r.capital_cost = displacement.capital_cost;

  const std::int64_t servers = r.server_count_effective;
  r.workload_income = money_per_period(pricing.vm_core_rate, kFullDay, layout.workload_vm_count * servers, pricing);
  r.vswitch_income =
      money_per_period(pricing.vm_core_rate, kFullDay * scenario.fleet_vswitch_utilization,
                       billable_vswitch_cores(layout) * servers, pricing);
  r.host_expense = money_per_period(pricing.host_core_cost_rate, kFullDay, layout.host_cores * servers, pricing);
  r.net_revenue = r.workload_income + r.vswitch_income - r.host_expense;
  return r;
}

OptionComparison compare_options(const FleetScenario& scenario) {
  OptionComparison cmp;
  std::optional<Money> baseline;
  for (AllocationPolicy p : kAllPolicies) {
    RevenueReport r = compute_operator_revenue(scenario, p);
    if (!baseline) baseline = r.net_revenue;
    OptionRow row{p, r.net_revenue, std::nullopt};
    if (baseline->milli_cents() != 0) {
      row.delta_vs_baseline_percent =
          Rational(r.net_revenue.milli_cents() - baseline->milli_cents(), baseline->milli_cents()) * 100;
    }
    cmp.rows.push_back(row);
  }
  return cmp;
}

std::vector<TenantBill> compute_tenant_bills(const std::vector<TenantUsage>& usages, const PricingModel& pricing,
                                             AllocationPolicy policy, std::int64_t servers) {
  if (servers < 0) throw DomainError("server residency count must be non-negative");
  const bool billable =
      policy == AllocationPolicy::SharedVswitchCore || policy == AllocationPolicy::DedicatedVswitchCores ||
      (policy == AllocationPolicy::TenantSharedCores && pricing.vswitch_billing == VswitchBilling::CpuCycle);

  std::vector<TenantBill> bills;
  bills.reserve(usages.size());
  for (const auto& u : usages) {
    Money charge = prorated_core_rent(pricing, u.usage_fraction, servers);
    bills.push_back({u.tenant_id, billable ? charge : Money{}, pricing.vswitch_billing, u.usage_fraction});
  }
  return bills;
}

std::vector<TenantBill> bill_from_meters(const std::vector<MeterRecord>& meters, const PricingModel& pricing) {
  if (meters.empty()) return {};
  const auto& first = meters.front();
  for (const auto& m : meters) {
    if (m.slice_count != first.slice_count || m.capacity_per_slice != first.capacity_per_slice)
      throw MeteringError("meter record " + m.tenant_id + " is on a different slice grid than " + first.tenant_id);
  }
  std::vector<TenantBill> bills;
  bills.reserve(meters.size());
  for (const auto& usage : derive_usage(meters)) {
    bills.push_back({usage.tenant_id, prorated_core_rent(pricing, usage.usage_fraction, 1), pricing.vswitch_billing,
                     usage.usage_fraction});
  }
  return bills;
}

}  // namespace vsecon
