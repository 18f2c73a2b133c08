#include "vsecon/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "vsecon/billing.hpp"
#include "vsecon/metering.hpp"
#include "vsecon/placement.hpp"
#include "vsecon/report.hpp"
#include "vsecon/scenario_io.hpp"

namespace vsecon {

namespace {

struct Options {
  std::string scenario;
  std::string option;
  std::string format = "table";
  std::string traces;
  std::string priority = "vswitch";
};

AllocationPolicy require_policy(const std::string& text) {
  auto p = parse_policy(text);
  if (!p) throw CLI::ValidationError("--option", "expected baseline, 1, 2 or 3, got '" + text + "'");
  return *p;
}

ReportFormat require_format(const std::string& text) {
  auto f = parse_report_format(text);
  if (!f) throw CLI::ValidationError("--format", "expected json, csv or table, got '" + text + "'");
  return *f;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  FleetScenario s = parse_scenario(o.scenario);
  out << render(compute_operator_revenue(s, require_policy(o.option)), require_format(o.format));
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  FleetScenario s = parse_scenario(o.scenario);
  out << render(compare_options(s), require_format(o.format));
  return kExitOk;
}

int cmd_bill(const Options& o, std::ostream& out) {
  FleetScenario s = parse_scenario(o.scenario);
  std::vector<TenantUsage> usages;
  for (const auto& t : s.tenants_per_server_template) usages.push_back({t.tenant_id, t.vswitch_usage_fraction});
  out << render(compute_tenant_bills(usages, s.pricing, require_policy(o.option), 1), require_format(o.format));
  return kExitOk;
}

int cmd_meter(const Options& o, std::ostream& out) {
  FleetScenario s = parse_scenario(o.scenario);
  const AllocationPolicy policy = require_policy(o.option);
  const ReportFormat fmt = require_format(o.format);
  if (policy == AllocationPolicy::Baseline)
    throw CLI::ValidationError("--option", "baseline has no metered vswitch compartments");
  SharedCorePriority priority;
  if (o.priority == "vswitch") priority = SharedCorePriority::VswitchFirst;
  else if (o.priority == "workload") priority = SharedCorePriority::WorkloadFirst;
  else throw CLI::ValidationError("--priority", "expected vswitch or workload");

  TraceSet set = parse_traces(o.traces);
  std::vector<MeterRecord> records;
  std::map<std::string, std::int64_t> workload_granted;
  if (policy == AllocationPolicy::TenantSharedCores) {
    const std::string suffix = ":workload";
    std::map<std::string, const DemandTrace*> workload;
    for (const auto& t : set.traces)
      if (t.tenant_id.size() > suffix.size() && t.tenant_id.ends_with(suffix))
        workload[t.tenant_id.substr(0, t.tenant_id.size() - suffix.size())] = &t;
    for (const auto& t : set.traces) {
      if (t.tenant_id.ends_with(suffix)) continue;
      DemandTrace idle{t.tenant_id + suffix, std::vector<std::int64_t>(t.demanded_cycles.size(), 0)};
      auto it = workload.find(t.tenant_id);
      auto [vswitch, wl] = schedule_tenant_shared(it == workload.end() ? idle : *it->second, t, set.core, priority);
      workload_granted[t.tenant_id] = wl.total_granted;
      records.push_back(std::move(vswitch));
    }
    for (const auto& [id, trace] : workload)
      if (std::none_of(records.begin(), records.end(), [&](const MeterRecord& r) { return r.tenant_id == id; }))
        throw CLI::ValidationError("--traces", "workload column " + trace->tenant_id + " has no vswitch column");
  } else if (std::any_of(set.traces.begin(), set.traces.end(),
                         [](const DemandTrace& t) { return t.tenant_id.ends_with(":workload"); })) {
    throw CLI::ValidationError("--traces", ":workload columns are only meaningful with --option 2");
  } else if (policy == AllocationPolicy::SharedVswitchCore) {
    records = schedule_shared_core(set.traces, set.core);
  } else {
    records = schedule_dedicated_cores(set.traces, set.core);
  }

  // Grid consistency check.
  bill_from_meters(records, s.pricing);
  auto bills = compute_tenant_bills(derive_usage(records), s.pricing, policy, 1);
  std::vector<MeterSummaryRow> rows;
  for (std::size_t i = 0; i < records.size(); ++i) {
    MeterSummaryRow row{records[i], bills[i], std::nullopt};
    if (auto it = workload_granted.find(records[i].tenant_id); it != workload_granted.end())
      row.workload_granted = it->second;
    rows.push_back(std::move(row));
  }
  out << render(rows, fmt);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  FleetScenario s = parse_scenario(o.scenario);
  std::vector<AllocationPolicy> policies;
  if (o.option.empty()) policies.assign(std::begin(kAllPolicies), std::end(kAllPolicies));
  else policies.push_back(require_policy(o.option));
  const ReportFormat fmt = require_format(o.format);

  std::vector<FeasibilityRow> rows;
  for (AllocationPolicy p : policies) {
    FeasibilityRow row;
    row.policy = p;
    row.layout = compute_layout(s.server_spec, p);
    row.vf = check_vf_feasibility(s.server_spec.nic, row.layout.vswitch_vm_count);
    row.violations = check_fleet_caps(s, row.layout);
    row.pf_count = s.server_spec.nic.pf_count;
    row.vswitch_vms_per_pf = s.server_spec.nic.vswitch_vms_per_pf;
    rows.push_back(std::move(row));
  }
  out << render(rows, fmt);
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); }) ? kExitOk : kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tenant-specific vswitch fleet economics: placement, metering and billing", "vsecon"};
  app.require_subcommand(1);
  Options o;

  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario, "Scenario YAML file or bundled name (paper-defaults, empty-fleet)")
        ->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json, csv or table")->default_val("table");
  };

  std::map<const CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;

  auto* simulate = app.add_subcommand("simulate", "Operator revenue report for one allocation option");
  add_scenario(simulate);
  simulate->add_option("--option", o.option, "baseline, 1, 2 or 3")->required();
  add_format(simulate);
  handlers[simulate] = cmd_simulate;

  auto* compare = app.add_subcommand("compare", "Net revenue of every option against the baseline");
  add_scenario(compare);
  add_format(compare);
  handlers[compare] = cmd_compare;

  auto* bill = app.add_subcommand("bill", "Per-tenant vswitch bills for one server residency");
  add_scenario(bill);
  bill->add_option("--option", o.option, "baseline, 1, 2 or 3")->required();
  add_format(bill);
  handlers[bill] = cmd_bill;

  auto* meter = app.add_subcommand("meter", "Schedule demand traces and bill the metered cycles");
  add_scenario(meter);
  meter->add_option("--traces", o.traces, "Trace CSV file")->required();
  meter->add_option("--option", o.option, "1, 2 or 3")->required();
  meter->add_option("--priority", o.priority, "Option 2 core priority: vswitch or workload")->default_val("vswitch");
  add_format(meter);
  handlers[meter] = cmd_meter;

  auto* check = app.add_subcommand("check", "VF and provider-cap feasibility");
  add_scenario(check);
  check->add_option("--option", o.option, "baseline, 1, 2 or 3 (default: all)");
  add_format(check);
  handlers[check] = cmd_check;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MeteringError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InfeasibleLayout& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitValidation;
}

}  // namespace vsecon
