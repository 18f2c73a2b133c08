#include "vsecon/model.hpp"

namespace vsecon {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace

std::string_view to_string(VswitchBilling b) {
  return b == VswitchBilling::TimeSlice ? "time_slice" : "cpu_cycle";
}

std::optional<VswitchBilling> parse_vswitch_billing(std::string_view text) {
  if (text == "time_slice") return VswitchBilling::TimeSlice;
  if (text == "cpu_cycle") return VswitchBilling::CpuCycle;
  return std::nullopt;
}

void PricingModel::validate() const {
  require(vm_core_rate > Money{}, "vm_core_rate must be positive");
  require(host_core_cost_rate >= Money{}, "host_core_cost_rate must be non-negative");
  require(server_capital_cost >= Money{}, "server_capital_cost must be non-negative");
  require(period_days > 0, "period_days must be positive");
}

void NicSpec::validate() const {
  require(pf_count >= 1, "pf_count must be at least 1");
  require(vswitch_vms_per_pf >= 1, "vswitch_vms_per_pf must be at least 1");
}

void ServerSpec::validate() const {
  require(total_cores >= 1, "total_cores must be at least 1");
  nic.validate();
}

void TenantSpec::validate() const {
  require(workload_vm_count >= 1, "tenant " + tenant_id + ": workload_vm_count must be at least 1");
  require(in_unit_interval(vswitch_usage_fraction),
          "tenant " + tenant_id + ": vswitch usage must lie in [0, 1]");
}

std::string_view policy_name(AllocationPolicy p) {
  switch (p) {
    case AllocationPolicy::Baseline: return "baseline";
    case AllocationPolicy::SharedVswitchCore: return "opt1";
    case AllocationPolicy::TenantSharedCores: return "opt2";
    case AllocationPolicy::DedicatedVswitchCores: return "opt3";
  }
  return "?";
}

std::optional<AllocationPolicy> parse_policy(std::string_view text) {
  if (text == "baseline" || text == "0") return AllocationPolicy::Baseline;
  if (text == "1" || text == "opt1") return AllocationPolicy::SharedVswitchCore;
  if (text == "2" || text == "opt2") return AllocationPolicy::TenantSharedCores;
  if (text == "3" || text == "opt3") return AllocationPolicy::DedicatedVswitchCores;
  return std::nullopt;
}

void FleetScenario::validate() const {
  require(server_count >= 0, "server_count must be non-negative");
  server_spec.validate();
  pricing.validate();
  for (const auto& t : tenants_per_server_template) t.validate();
  require(in_unit_interval(fleet_vswitch_utilization), "utilization must lie in [0, 1]");
  if (fleet_vm_cap_per_server) require(*fleet_vm_cap_per_server >= 0, "vm_cap_per_server must be non-negative");
  if (fleet_vm_cap_total) require(*fleet_vm_cap_total >= 0, "vm_cap_total must be non-negative");
}

Money money_per_period(Money rate_per_core_hour, const Rational& hours_per_day,
                       std::int64_t unit_count, const PricingModel& pricing) {
  if (hours_per_day < 0 || hours_per_day > 24)
    throw DomainError("hours_per_day " + to_string(hours_per_day) + " outside [0, 24]");
  if (unit_count < 0) throw DomainError("unit_count must be non-negative");
  Rational total = rate_per_core_hour.as_rational() * hours_per_day;
  total *= unit_count;
  total *= pricing.period_days;
  return Money::rounded(total);
}

Rational tenant_weight(const TenantSpec& t) { return Rational(t.workload_vm_count, 2); }

}  // namespace vsecon
