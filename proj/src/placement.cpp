#include "vsecon/placement.hpp"

namespace vsecon {

std::string CapViolation::describe() const {
  std::string what = kind == Kind::PerServer ? "vm_cap_per_server" : "vm_cap_total";
  return what + " exceeded: " + std::to_string(actual) + " VMs > limit " + std::to_string(limit);
}

std::int64_t reserved_cores(AllocationPolicy policy) {
  switch (policy) {
    case AllocationPolicy::Baseline: return 2;
    case AllocationPolicy::SharedVswitchCore: return 2;
    case AllocationPolicy::TenantSharedCores: return 1;
    case AllocationPolicy::DedicatedVswitchCores: return 1;
  }
  return 0;
}

ServerLayout compute_layout(const ServerSpec& server, AllocationPolicy policy) {
  const std::int64_t reserved = reserved_cores(policy);
  if (server.total_cores < reserved) {
    throw InfeasibleLayout("total_cores " + std::to_string(server.total_cores) + " below the " +
                           std::to_string(reserved) + " reserved cores required by " +
                           std::string(policy_name(policy)));
  }
  ServerLayout layout;
  layout.policy = policy;
  layout.host_cores = policy == AllocationPolicy::Baseline ? 2 : 1;
  std::int64_t free_cores = server.total_cores - reserved;

  if (policy == AllocationPolicy::DedicatedVswitchCores) {
    // 3 cores per full tenant, 2 for a single-VM tenant (VM + vswitch).
    layout.full_tenants = free_cores / 3;
    layout.single_vm_tenants = free_cores % 3 >= 2 ? 1 : 0;
  } else {
    layout.full_tenants = free_cores / 2;
    layout.single_vm_tenants = free_cores % 2;
  }
  layout.workload_vm_count = 2 * layout.full_tenants + layout.single_vm_tenants;
  layout.tenant_weight_hosted = Rational(layout.full_tenants) + Rational(layout.single_vm_tenants, 2);

  const std::int64_t tenants = layout.full_tenants + layout.single_vm_tenants;
  switch (policy) {
    case AllocationPolicy::Baseline:
      break;
    case AllocationPolicy::SharedVswitchCore:
      layout.vswitch_vm_count = tenants;
      layout.vswitch_dedicated_cores = 1;
      break;
    case AllocationPolicy::TenantSharedCores:
      layout.vswitch_vm_count = tenants;
      break;
    case AllocationPolicy::DedicatedVswitchCores:
      layout.vswitch_vm_count = tenants;
      layout.vswitch_dedicated_cores = tenants;
      break;
  }
  return layout;
}

DisplacementReport compute_displacement(const FleetScenario& scenario, AllocationPolicy policy) {
  const ServerLayout baseline = compute_layout(scenario.server_spec, AllocationPolicy::Baseline);
  const ServerLayout target = compute_layout(scenario.server_spec, policy);

  DisplacementReport report;
  report.new_server_layout = target;
  Rational lost = baseline.tenant_weight_hosted - target.tenant_weight_hosted;
  if (lost <= 0 || scenario.server_count == 0) return report;

  report.displaced_weight = lost * scenario.server_count;
  if (target.tenant_weight_hosted == 0) {
    throw InfeasibleLayout("policy " + std::string(policy_name(policy)) +
                           " hosts no tenants, displaced weight cannot be re-hosted");
  }
  report.new_servers_needed = ceil_of(report.displaced_weight / target.tenant_weight_hosted);
  report.capital_cost = scenario.pricing.server_capital_cost * report.new_servers_needed;
  return report;
}

VfFeasibility check_vf_feasibility(const NicSpec& nic, std::int64_t vswitch_vm_count) {
  VfFeasibility f;
  f.vswitch_vm_capacity = nic.pf_count * nic.vswitch_vms_per_pf;
  f.min_pfs_required = (vswitch_vm_count + nic.vswitch_vms_per_pf - 1) / nic.vswitch_vms_per_pf;
  f.feasible = vswitch_vm_count <= f.vswitch_vm_capacity;
  return f;
}

std::vector<CapViolation> check_fleet_caps(const FleetScenario& scenario, const ServerLayout& layout) {
  std::vector<CapViolation> out;
  if (scenario.fleet_vm_cap_per_server && layout.workload_vm_count > *scenario.fleet_vm_cap_per_server) {
    out.push_back({CapViolation::Kind::PerServer, *scenario.fleet_vm_cap_per_server, layout.workload_vm_count});
  }
  const std::int64_t total = layout.workload_vm_count * scenario.server_count;
  if (scenario.fleet_vm_cap_total && total > *scenario.fleet_vm_cap_total) {
    out.push_back({CapViolation::Kind::FleetTotal, *scenario.fleet_vm_cap_total, total});
  }
  return out;
}

}  // namespace vsecon
