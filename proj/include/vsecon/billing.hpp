#pragma once

// Operator revenue, per-tenant vswitch bills, and cross-policy comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsecon/metering.hpp"
#include "vsecon/model.hpp"
#include "vsecon/placement.hpp"

namespace vsecon {

// Money fields are per billing period (pricing.period_days).
struct RevenueReport {
  AllocationPolicy policy = AllocationPolicy::Baseline;
  Money workload_income;
  Money vswitch_income;
  Money host_expense;
  Money net_revenue;
  // One-time; never folded into net_revenue.
  Money capital_cost;
  std::int64_t server_count_effective = 0;
  Rational displaced_weight{0};
  std::int64_t new_servers = 0;

  Money total_income() const { return workload_income + vswitch_income; }
  bool operator==(const RevenueReport&) const = default;
};

struct TenantBill {
  std::string tenant_id;
  Money vswitch_charge;
  VswitchBilling basis = VswitchBilling::TimeSlice;
  Rational usage_fraction{0};

  bool operator==(const TenantBill&) const = default;
};

struct OptionRow {
  AllocationPolicy policy;
  Money net_revenue;
  // (net - baseline_net) / baseline_net * 100; absent when baseline net is 0.
  std::optional<Rational> delta_vs_baseline_percent;

  bool operator==(const OptionRow&) const = default;
};

struct OptionComparison {
  std::vector<OptionRow> rows;  // baseline, opt1, opt2, opt3

  bool operator==(const OptionComparison&) const = default;
};

/// Vswitch cores the operator can bill per server under `policy`.
std::int64_t billable_vswitch_cores(const ServerLayout& layout);

RevenueReport compute_operator_revenue(const FleetScenario& scenario, AllocationPolicy policy);

OptionComparison compare_options(const FleetScenario& scenario);

/// Charges per tenant for `servers` server residencies. TimeSlice billing
/// only exists where the vswitch has its own core (options 1 and 3);
/// CpuCycle billing prices every metered compartment (options 1-3).
std::vector<TenantBill> compute_tenant_bills(const std::vector<TenantUsage>& usages, const PricingModel& pricing,
                                             AllocationPolicy policy, std::int64_t servers);

/// Prorated core rent from metered grants. All records must share one
/// slice grid (same slice count and capacity).
std::vector<TenantBill> bill_from_meters(const std::vector<MeterRecord>& meters, const PricingModel& pricing);

}  // namespace vsecon
