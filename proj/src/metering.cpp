#include "vsecon/metering.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vsecon {

namespace {

std::size_t common_length(const std::vector<DemandTrace>& traces) {
  if (traces.empty()) throw MeteringError("no demand traces");
  const std::size_t n = traces.front().demanded_cycles.size();
  std::set<std::string> ids;
  for (const auto& t : traces) {
    if (t.demanded_cycles.size() != n)
      throw MeteringError("trace " + t.tenant_id + " has " + std::to_string(t.demanded_cycles.size()) +
                          " slices, expected " + std::to_string(n));
    if (!ids.insert(t.tenant_id).second) throw MeteringError("duplicate tenant id " + t.tenant_id);
    for (auto d : t.demanded_cycles)
      if (d < 0) throw MeteringError("trace " + t.tenant_id + " has a negative demand");
  }
  return n;
}

MeterRecord finish(std::string id, std::vector<std::int64_t> granted, std::int64_t capacity) {
  MeterRecord r;
  r.tenant_id = std::move(id);
  r.total_granted = std::accumulate(granted.begin(), granted.end(), std::int64_t{0});
  r.slice_count = static_cast<std::int64_t>(granted.size());
  r.capacity_per_slice = capacity;
  r.granted_cycles = std::move(granted);
  if (r.slice_count > 0) r.usage_fraction = Rational(r.total_granted, capacity * r.slice_count);
  return r;
}

}  // namespace

void CoreModel::validate() const {
  if (cycle_capacity_per_slice <= 0) throw MeteringError("cycle capacity must be positive");
  if (per_compartment_overhead < 0) throw MeteringError("per-compartment overhead must be non-negative");
}

std::vector<std::int64_t> water_fill(const std::vector<std::int64_t>& demands, std::int64_t capacity,
                                     const std::vector<std::size_t>& order) {
  const std::size_t n = demands.size();
  std::vector<std::int64_t> grant(n, 0);
  // Unsatisfied tenants, smallest demand first, rank breaking ties.
  std::vector<std::size_t> open(n);
  std::iota(open.begin(), open.end(), std::size_t{0});
  std::sort(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
    return demands[a] != demands[b] ? demands[a] < demands[b] : order[a] < order[b];
  });

  std::int64_t remaining = std::max<std::int64_t>(capacity, 0);
  std::size_t next = 0;
  while (next < n) {
    const auto active = static_cast<std::int64_t>(n - next);
    const std::int64_t share = remaining / active;
    if (demands[open[next]] <= share) {
      grant[open[next]] = demands[open[next]];
      remaining -= demands[open[next]];
      ++next;
      continue;
    }
    // Every remaining demand exceeds the equal share: split evenly, hand
    // the remainder out by rank.
    std::vector<std::size_t> rest(open.begin() + static_cast<std::ptrdiff_t>(next), open.end());
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
    std::int64_t leftover = remaining - share * active;
    for (std::size_t idx : rest) {
      grant[idx] = share + (leftover > 0 ? 1 : 0);
      if (leftover > 0) --leftover;
    }
    break;
  }
  return grant;
}

std::vector<MeterRecord> schedule_shared_core(const std::vector<DemandTrace>& traces, const CoreModel& core) {
  core.validate();
  const std::size_t slices = common_length(traces);
  const std::size_t n = traces.size();

  // Rank by tenant id so the outcome is independent of enumeration order.
  std::vector<std::size_t> by_id(n);
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return traces[a].tenant_id < traces[b].tenant_id; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_id[r]] = r;

  const std::int64_t effective = std::max<std::int64_t>(
      0, core.cycle_capacity_per_slice - core.per_compartment_overhead * static_cast<std::int64_t>(n));

  std::vector<std::vector<std::int64_t>> granted(n, std::vector<std::int64_t>(slices, 0));
  std::vector<std::int64_t> demands(n);
  for (std::size_t s = 0; s < slices; ++s) {
    for (std::size_t i = 0; i < n; ++i) demands[i] = traces[i].demanded_cycles[s];
    auto g = water_fill(demands, effective, rank);
    for (std::size_t i = 0; i < n; ++i) granted[i][s] = g[i];
  }

  std::vector<MeterRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(finish(traces[i].tenant_id, std::move(granted[i]), core.cycle_capacity_per_slice));
  return out;
}

std::vector<MeterRecord> schedule_dedicated_cores(const std::vector<DemandTrace>& traces, const CoreModel& core) {
  core.validate();
  common_length(traces);
  const std::int64_t usable = std::max<std::int64_t>(0, core.cycle_capacity_per_slice - core.per_compartment_overhead);
  std::vector<MeterRecord> out;
  out.reserve(traces.size());
  for (const auto& t : traces) {
    std::vector<std::int64_t> g(t.demanded_cycles.size());
    std::transform(t.demanded_cycles.begin(), t.demanded_cycles.end(), g.begin(),
                   [&](std::int64_t d) { return std::min(d, usable); });
    out.push_back(finish(t.tenant_id, std::move(g), core.cycle_capacity_per_slice));
  }
  return out;
}

std::pair<MeterRecord, MeterRecord> schedule_tenant_shared(const DemandTrace& workload_demand,
                                                           const DemandTrace& vswitch_demand,
                                                           const CoreModel& core, SharedCorePriority priority) {
  core.validate();
  const auto& w = workload_demand.demanded_cycles;
  const auto& v = vswitch_demand.demanded_cycles;
  if (w.size() != v.size()) throw MeteringError("workload and vswitch traces differ in length");
  for (std::size_t s = 0; s < w.size(); ++s)
    if (w[s] < 0 || v[s] < 0) throw MeteringError("negative demand");

  const std::int64_t cap = core.cycle_capacity_per_slice;
  std::vector<std::int64_t> gw(w.size());
  std::vector<std::int64_t> gv(v.size());
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (priority == SharedCorePriority::VswitchFirst) {
      gv[s] = std::min(v[s], cap);
      gw[s] = std::min(w[s], cap - gv[s]);
    } else {
      gw[s] = std::min(w[s], cap);
      gv[s] = std::min(v[s], cap - gw[s]);
    }
  }
  return {finish(vswitch_demand.tenant_id, std::move(gv), cap),
          finish(workload_demand.tenant_id, std::move(gw), cap)};
}

std::vector<TenantUsage> derive_usage(const std::vector<MeterRecord>& records) {
  std::vector<TenantUsage> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (r.capacity_per_slice <= 0 && r.slice_count > 0)
      throw MeteringError("record " + r.tenant_id + " has no capacity");
    Rational usage = r.slice_count == 0 ? Rational(0) : Rational(r.total_granted, r.capacity_per_slice * r.slice_count);
    out.push_back({r.tenant_id, usage});
  }
  return out;
}

}  // namespace vsecon
