#pragma once

// Scenario (YAML) and demand-trace (CSV) ingestion.
//
// Scenario layout:
//
//   pricing:                       # optional, defaults shown
//     vm_core_rate_cents_per_hour: 1
//     host_core_cost_cents_per_hour: 1
//     server_capital_cost_dollars: 2000
//     period_days: 365
//     vswitch_billing: time_slice  # or cpu_cycle
//   fleet:
//     server_count: 100            # required
//     cores_per_server: 12         # required
//     pf_count: 1
//     vswitch_vms_per_pf: 21
//     vm_cap_per_server: 60        # optional
//     vm_cap_total: 700            # optional
//   utilization_percent: 50
//   tenants:
//     - {id: t1, workload_vms: 2, vswitch_usage_percent: 1}
//
// Numbers are read as exact decimals ("12.5") or fractions ("100/3").

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vsecon/metering.hpp"
#include "vsecon/model.hpp"

namespace vsecon {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `path`; when no such file exists and `path` names a bundled
/// scenario ("paper-defaults", "empty-fleet") the bundled text is used.
FleetScenario parse_scenario(const std::string& path);
FleetScenario parse_scenario_text(std::string_view yaml, std::string_view source_name = "<scenario>");

std::string serialize_scenario(const FleetScenario& scenario);

std::optional<std::string_view> bundled_scenario(std::string_view name);

struct TraceSet {
  CoreModel core;
  std::vector<DemandTrace> traces;
};

// Header: `capacity=<int>[;overhead=<int>],<id>,<id>...`; then one row of
// integer cycles per slice.
TraceSet parse_traces(const std::string& path);
TraceSet parse_traces_text(std::string_view csv, std::string_view source_name = "<traces>");

}  // namespace vsecon
