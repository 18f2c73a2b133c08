#pragma once

// Slice-by-slice scheduling of vswitch compartments onto cores, producing
// per-tenant cycle accounting.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsecon/rational.hpp"

namespace vsecon {

class MeteringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DemandTrace {
  std::string tenant_id;
  std::vector<std::int64_t> demanded_cycles;  // one entry per slice
};

struct CoreModel {
  std::int64_t cycle_capacity_per_slice = 1;
  // Cycles lost per compartment per slice (ports, buffers, context switches).
  std::int64_t per_compartment_overhead = 0;

  void validate() const;
};

struct MeterRecord {
  std::string tenant_id;
  std::vector<std::int64_t> granted_cycles;
  std::int64_t total_granted = 0;
  // Grid the record was metered on.
  std::int64_t capacity_per_slice = 0;
  std::int64_t slice_count = 0;
  Rational usage_fraction{0};

  bool operator==(const MeterRecord&) const = default;
};

enum class SharedCorePriority { VswitchFirst, WorkloadFirst };

struct TenantUsage {
  std::string tenant_id;
  Rational usage_fraction{0};

  bool operator==(const TenantUsage&) const = default;
};

/// Integer max-min fair split of `capacity` over `demands`. Leftover cycles
/// after the equal split go one each to the lowest `order` ranks.
/// `order[i]` is the tiebreak rank of demand i (lower wins).
std::vector<std::int64_t> water_fill(const std::vector<std::int64_t>& demands, std::int64_t capacity,
                                     const std::vector<std::size_t>& order);

/// All compartments pinned to one core; per slice the effective capacity is
/// capacity - overhead * compartments (floored at 0), split max-min fairly.
/// Result is ordered like `traces`, but grants do not depend on that order.
std::vector<MeterRecord> schedule_shared_core(const std::vector<DemandTrace>& traces, const CoreModel& core);

/// One core per compartment: grant = min(demand, capacity - overhead).
std::vector<MeterRecord> schedule_dedicated_cores(const std::vector<DemandTrace>& traces, const CoreModel& core);

/// Vswitch and workload share the tenant's core. Returns {vswitch, workload}.
std::pair<MeterRecord, MeterRecord> schedule_tenant_shared(
    const DemandTrace& workload_demand, const DemandTrace& vswitch_demand, const CoreModel& core,
    SharedCorePriority priority = SharedCorePriority::VswitchFirst);

std::vector<TenantUsage> derive_usage(const std::vector<MeterRecord>& records);

}  // namespace vsecon
