#pragma once

// Per-server packing of tenants and vswitch compartments, fleet
// displacement, and NIC / provider-cap feasibility checks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsecon/model.hpp"

namespace vsecon {

class InfeasibleLayout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ServerLayout {
  AllocationPolicy policy = AllocationPolicy::Baseline;
  std::int64_t host_cores = 0;
  std::int64_t workload_vm_count = 0;
  std::int64_t vswitch_vm_count = 0;
  // Cores running only vswitch compartments; under SharedVswitchCore this is
  // the single shared core.
  std::int64_t vswitch_dedicated_cores = 0;
  std::int64_t full_tenants = 0;
  std::int64_t single_vm_tenants = 0;
  Rational tenant_weight_hosted{0};

  std::int64_t cores_used() const { return host_cores + workload_vm_count + vswitch_dedicated_cores; }
  bool operator==(const ServerLayout&) const = default;
};

struct DisplacementReport {
  Rational displaced_weight{0};
  std::int64_t new_servers_needed = 0;
  Money capital_cost;
  ServerLayout new_server_layout;
};

struct VfFeasibility {
  bool feasible = true;
  std::int64_t vswitch_vm_capacity = 0;
  std::int64_t min_pfs_required = 0;
};

struct CapViolation {
  enum class Kind { PerServer, FleetTotal };
  Kind kind;
  std::int64_t limit;
  std::int64_t actual;

  std::string describe() const;
};

/// Cores reserved before any tenant is placed: host cores plus, for
/// SharedVswitchCore, the shared vswitch core.
std::int64_t reserved_cores(AllocationPolicy policy);

/// Deterministic greedy packing. Full (two-VM) tenants first, then at most
/// one single-VM tenant in the leftover cores.
ServerLayout compute_layout(const ServerSpec& server, AllocationPolicy policy);

DisplacementReport compute_displacement(const FleetScenario& scenario, AllocationPolicy policy);

VfFeasibility check_vf_feasibility(const NicSpec& nic, std::int64_t vswitch_vm_count);

// Workload VMs per server against vm_cap_per_server, and per-server count
// times scenario.server_count against vm_cap_total.
std::vector<CapViolation> check_fleet_caps(const FleetScenario& scenario, const ServerLayout& layout);

}  // namespace vsecon
