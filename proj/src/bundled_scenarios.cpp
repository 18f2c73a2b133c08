#include "vsecon/scenario_io.hpp"

namespace vsecon {

namespace {

constexpr std::string_view kPaperDefaults = R"(# 100 servers x 12 cores at EC2-style 1 cent/core-hour, vswitches busy 50%.
pricing:
  vm_core_rate_cents_per_hour: 1
  host_core_cost_cents_per_hour: 1
  server_capital_cost_dollars: 2000
  period_days: 365
  vswitch_billing: time_slice
fleet:
  server_count: 100
  cores_per_server: 12
  pf_count: 1
  vswitch_vms_per_pf: 21
utilization_percent: 50
tenants:
  - {id: t1, workload_vms: 2, vswitch_usage_percent: 1}
  - {id: t2, workload_vms: 2, vswitch_usage_percent: 2}
  - {id: t3, workload_vms: 2, vswitch_usage_percent: 2}
  - {id: t4, workload_vms: 2, vswitch_usage_percent: 5}
  - {id: t5, workload_vms: 2, vswitch_usage_percent: 10}
  - {id: t6, workload_vms: 2, vswitch_usage_percent: 30}
)";

constexpr std::string_view kEmptyFleet = R"(fleet:
  server_count: 0
  cores_per_server: 12
tenants: []
)";

}  // namespace

std::optional<std::string_view> bundled_scenario(std::string_view name) {
  if (name == "paper-defaults") return kPaperDefaults;
  if (name == "empty-fleet") return kEmptyFleet;
  return std::nullopt;
}

}  // namespace vsecon
