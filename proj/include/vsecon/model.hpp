#pragma once

// Domain types for the fleet economics model: pricing, servers, tenants,
// allocation policies and whole-fleet scenarios.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vsecon/money.hpp"
#include "vsecon/rational.hpp"

namespace vsecon {

// Raised when an input lies outside an operation's domain (hours > 24,
// usage > 100%, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class VswitchBilling { TimeSlice, CpuCycle };

std::string_view to_string(VswitchBilling b);
std::optional<VswitchBilling> parse_vswitch_billing(std::string_view text);

// All rates are per core-hour.
struct PricingModel {
  Money vm_core_rate = Money::from_cents(1);
  Money host_core_cost_rate = Money::from_cents(1);
  Money server_capital_cost = Money::from_dollars(2'000);
  std::int64_t period_days = 365;
  VswitchBilling vswitch_billing = VswitchBilling::TimeSlice;

  void validate() const;
  bool operator==(const PricingModel&) const = default;
};

struct NicSpec {
  std::int64_t pf_count = 1;
  std::int64_t vswitch_vms_per_pf = 21;

  void validate() const;
  bool operator==(const NicSpec&) const = default;
};

struct ServerSpec {
  std::int64_t total_cores = 12;
  NicSpec nic;

  void validate() const;
  bool operator==(const ServerSpec&) const = default;
};

struct TenantSpec {
  std::string tenant_id;
  std::int64_t workload_vm_count = 2;
  Rational vswitch_usage_fraction{0};

  void validate() const;
  bool operator==(const TenantSpec&) const = default;
};

enum class AllocationPolicy {
  Baseline,               // vswitch co-located with the host, 2 host cores
  SharedVswitchCore,      // option 1: one core shared by all tenant vswitches
  TenantSharedCores,      // option 2: vswitch runs on its tenant's cores
  DedicatedVswitchCores,  // option 3: one dedicated core per tenant vswitch
};

inline constexpr AllocationPolicy kAllPolicies[] = {
    AllocationPolicy::Baseline, AllocationPolicy::SharedVswitchCore,
    AllocationPolicy::TenantSharedCores, AllocationPolicy::DedicatedVswitchCores};

// "baseline", "opt1", "opt2", "opt3"
std::string_view policy_name(AllocationPolicy p);
// Accepts "baseline"/"0", "1"/"opt1", "2"/"opt2", "3"/"opt3".
std::optional<AllocationPolicy> parse_policy(std::string_view text);

struct FleetScenario {
  std::int64_t server_count = 100;
  ServerSpec server_spec;
  std::vector<TenantSpec> tenants_per_server_template;
  PricingModel pricing;
  Rational fleet_vswitch_utilization{1, 2};
  std::optional<std::int64_t> fleet_vm_cap_per_server;
  std::optional<std::int64_t> fleet_vm_cap_total;

  void validate() const;
  bool operator==(const FleetScenario&) const = default;
};

/// rate x hours_per_day x unit_count x period_days, exact up to rounding
/// to the milli-cent. Throws DomainError for hours outside [0, 24] or a
/// negative unit count.
Money money_per_period(Money rate_per_core_hour, const Rational& hours_per_day,
                       std::int64_t unit_count, const PricingModel& pricing);

/// Tenant size in units of a two-VM tenant.
Rational tenant_weight(const TenantSpec& t);

}  // namespace vsecon
