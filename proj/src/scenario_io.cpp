#include "vsecon/scenario_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace vsecon {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const YAML::Node& at, const std::string& key, const std::string& what) const {
    std::ostringstream msg;
    msg << source_;
    if (at.IsDefined() && at.Mark().line >= 0) msg << ":" << at.Mark().line + 1;
    msg << ": key '" << key << "': " << what;
    throw ParseError(msg.str());
  }

  void reject_unknown(const YAML::Node& map, const std::string& where, std::set<std::string> allowed) const {
    for (auto it = map.begin(); it != map.end(); ++it) {
      auto key = it->first.as<std::string>();
      if (!allowed.count(key)) fail(it->first, where.empty() ? key : where + "." + key, "unknown key");
    }
  }

  Rational number(const YAML::Node& parent, const std::string& key, const std::string& path) const {
    const YAML::Node node = parent[key];
    if (!node.IsScalar()) fail(node.IsDefined() ? node : parent, path, "expected a number");
    const std::string text = node.Scalar();
    try {
      auto slash = text.find('/');
      if (slash == std::string::npos) return parse_decimal(text);
      Rational den = parse_decimal(text.substr(slash + 1));
      if (den == 0) fail(node, path, "zero denominator");
      return parse_decimal(text.substr(0, slash)) / den;
    } catch (const std::invalid_argument&) {
      fail(node, path, "non-numeric value '" + text + "'");
    }
  }

  std::int64_t integer(const YAML::Node& parent, const std::string& key, const std::string& path) const {
    Rational r = number(parent, key, path);
    if (!is_integral(r)) fail(parent[key], path, "expected an integer");
    return r.numerator();
  }

  Rational percent(const YAML::Node& parent, const std::string& key, const std::string& path) const {
    Rational r = number(parent, key, path);
    if (r < 0 || r > 100) fail(parent[key], path, "percentage " + to_string(r) + " outside [0, 100]");
    return r / 100;
  }

  Money money(const YAML::Node& parent, const std::string& key, const std::string& path,
              std::int64_t milli_cents_per_unit) const {
    Rational r = number(parent, key, path) * milli_cents_per_unit;
    if (!is_integral(r)) fail(parent[key], path, "amount is finer than one milli-cent");
    return Money::from_milli_cents(r.numerator());
  }

  void require(const YAML::Node& parent, const std::string& key, const std::string& path) const {
    if (!parent[key]) fail(parent, path, "missing required key");
  }

 private:
  std::string source_;
};

std::string number_text(const Rational& r) {
  if (auto d = exact_decimal(r)) return *d;
  return to_string(r);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FleetScenario parse_scenario(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    if (auto text = bundled_scenario(path)) return parse_scenario_text(*text, path);
  }
  return parse_scenario_text(read_file(path), path);
}

FleetScenario parse_scenario_text(std::string_view yaml, std::string_view source_name) {
  Reader rd(source_name);
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string(source_name) + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!root.IsMap()) throw ParseError(std::string(source_name) + ": scenario must be a mapping");
  rd.reject_unknown(root, "", {"pricing", "fleet", "tenants", "utilization_percent"});

  FleetScenario s;
  s.tenants_per_server_template.clear();

  if (const YAML::Node pricing = root["pricing"]) {
    if (!pricing.IsMap()) rd.fail(pricing, "pricing", "expected a mapping");
    rd.reject_unknown(pricing, "pricing",
                      {"vm_core_rate_cents_per_hour", "host_core_cost_cents_per_hour", "server_capital_cost_dollars",
                       "period_days", "vswitch_billing"});
    PricingModel& p = s.pricing;
    if (pricing["vm_core_rate_cents_per_hour"])
      p.vm_core_rate = rd.money(pricing, "vm_core_rate_cents_per_hour", "pricing.vm_core_rate_cents_per_hour", Money::kPerCent);
    if (pricing["host_core_cost_cents_per_hour"])
      p.host_core_cost_rate =
          rd.money(pricing, "host_core_cost_cents_per_hour", "pricing.host_core_cost_cents_per_hour", Money::kPerCent);
    if (pricing["server_capital_cost_dollars"])
      p.server_capital_cost =
          rd.money(pricing, "server_capital_cost_dollars", "pricing.server_capital_cost_dollars", Money::kPerDollar);
    if (pricing["period_days"]) p.period_days = rd.integer(pricing, "period_days", "pricing.period_days");
    if (const YAML::Node b = pricing["vswitch_billing"]) {
      auto basis = b.IsScalar() ? parse_vswitch_billing(b.Scalar()) : std::nullopt;
      if (!basis) rd.fail(b, "pricing.vswitch_billing", "expected time_slice or cpu_cycle");
      p.vswitch_billing = *basis;
    }
    if (p.vm_core_rate <= Money{}) rd.fail(pricing["vm_core_rate_cents_per_hour"], "pricing.vm_core_rate_cents_per_hour", "must be positive");
    if (p.period_days <= 0) rd.fail(pricing["period_days"], "pricing.period_days", "must be positive");
  }

  rd.require(root, "fleet", "fleet");
  const YAML::Node fleet = root["fleet"];
  if (!fleet.IsMap()) rd.fail(fleet, "fleet", "expected a mapping");
  rd.reject_unknown(fleet, "fleet",
                    {"server_count", "cores_per_server", "pf_count", "vswitch_vms_per_pf", "vm_cap_per_server",
                     "vm_cap_total"});
  rd.require(fleet, "server_count", "fleet.server_count");
  rd.require(fleet, "cores_per_server", "fleet.cores_per_server");
  s.server_count = rd.integer(fleet, "server_count", "fleet.server_count");
  if (s.server_count < 0) rd.fail(fleet["server_count"], "fleet.server_count", "must be non-negative");
  s.server_spec.total_cores = rd.integer(fleet, "cores_per_server", "fleet.cores_per_server");
  if (s.server_spec.total_cores < 1) rd.fail(fleet["cores_per_server"], "fleet.cores_per_server", "must be at least 1");
  if (fleet["pf_count"]) {
    s.server_spec.nic.pf_count = rd.integer(fleet, "pf_count", "fleet.pf_count");
    if (s.server_spec.nic.pf_count < 1) rd.fail(fleet["pf_count"], "fleet.pf_count", "must be at least 1");
  }
  if (fleet["vswitch_vms_per_pf"]) {
    s.server_spec.nic.vswitch_vms_per_pf = rd.integer(fleet, "vswitch_vms_per_pf", "fleet.vswitch_vms_per_pf");
    if (s.server_spec.nic.vswitch_vms_per_pf < 1)
      rd.fail(fleet["vswitch_vms_per_pf"], "fleet.vswitch_vms_per_pf", "must be at least 1");
  }
  if (fleet["vm_cap_per_server"]) {
    s.fleet_vm_cap_per_server = rd.integer(fleet, "vm_cap_per_server", "fleet.vm_cap_per_server");
    if (*s.fleet_vm_cap_per_server < 0) rd.fail(fleet["vm_cap_per_server"], "fleet.vm_cap_per_server", "must be non-negative");
  }
  if (fleet["vm_cap_total"]) {
    s.fleet_vm_cap_total = rd.integer(fleet, "vm_cap_total", "fleet.vm_cap_total");
    if (*s.fleet_vm_cap_total < 0) rd.fail(fleet["vm_cap_total"], "fleet.vm_cap_total", "must be non-negative");
  }

  if (root["utilization_percent"])
    s.fleet_vswitch_utilization = rd.percent(root, "utilization_percent", "utilization_percent");

  if (const YAML::Node tenants = root["tenants"]) {
    if (!tenants.IsSequence()) rd.fail(tenants, "tenants", "expected a list");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < tenants.size(); ++i) {
      const YAML::Node t = tenants[i];
      const std::string path = "tenants[" + std::to_string(i) + "]";
      if (!t.IsMap()) rd.fail(t, path, "expected a mapping");
      rd.reject_unknown(t, path, {"id", "workload_vms", "vswitch_usage_percent"});
      rd.require(t, "id", path + ".id");
      rd.require(t, "workload_vms", path + ".workload_vms");
      rd.require(t, "vswitch_usage_percent", path + ".vswitch_usage_percent");
      TenantSpec spec;
      if (!t["id"].IsScalar()) rd.fail(t["id"], path + ".id", "expected a string");
      spec.tenant_id = t["id"].Scalar();
      if (!seen.insert(spec.tenant_id).second) rd.fail(t["id"], path + ".id", "duplicate tenant id " + spec.tenant_id);
      spec.workload_vm_count = rd.integer(t, "workload_vms", path + ".workload_vms");
      if (spec.workload_vm_count < 1) rd.fail(t["workload_vms"], path + ".workload_vms", "must be at least 1");
      spec.vswitch_usage_fraction = rd.percent(t, "vswitch_usage_percent", path + ".vswitch_usage_percent");
      s.tenants_per_server_template.push_back(std::move(spec));
    }
  }
  return s;
}

std::string serialize_scenario(const FleetScenario& s) {
  auto cents = [](Money m) { return number_text(Rational(m.milli_cents(), Money::kPerCent)); };
  std::ostringstream out;
  out << "pricing:\n"
      << "  vm_core_rate_cents_per_hour: " << cents(s.pricing.vm_core_rate) << "\n"
      << "  host_core_cost_cents_per_hour: " << cents(s.pricing.host_core_cost_rate) << "\n"
      << "  server_capital_cost_dollars: " << s.pricing.server_capital_cost.dollars_string() << "\n"
      << "  period_days: " << s.pricing.period_days << "\n"
      << "  vswitch_billing: " << to_string(s.pricing.vswitch_billing) << "\n"
      << "fleet:\n"
      << "  server_count: " << s.server_count << "\n"
      << "  cores_per_server: " << s.server_spec.total_cores << "\n"
      << "  pf_count: " << s.server_spec.nic.pf_count << "\n"
      << "  vswitch_vms_per_pf: " << s.server_spec.nic.vswitch_vms_per_pf << "\n";
  if (s.fleet_vm_cap_per_server) out << "  vm_cap_per_server: " << *s.fleet_vm_cap_per_server << "\n";
  if (s.fleet_vm_cap_total) out << "  vm_cap_total: " << *s.fleet_vm_cap_total << "\n";
  out << "utilization_percent: \"" << number_text(s.fleet_vswitch_utilization * 100) << "\"\n";
  if (s.tenants_per_server_template.empty()) {
    out << "tenants: []\n";
  } else {
    out << "tenants:\n";
    for (const auto& t : s.tenants_per_server_template) {
      YAML::Emitter id;
      id << YAML::DoubleQuoted << t.tenant_id;
      out << "  - {id: " << id.c_str() << ", workload_vms: " << t.workload_vm_count
          << ", vswitch_usage_percent: \"" << number_text(t.vswitch_usage_fraction * 100) << "\"}\n";
    }
  }
  return out.str();
}

TraceSet parse_traces(const std::string& path) { return parse_traces_text(read_file(path), path); }

TraceSet parse_traces_text(std::string_view csv, std::string_view source_name) {
  const std::string source(source_name);
  auto fail = [&](std::size_t line, const std::string& what) -> ParseError {
    return ParseError(source + ":" + std::to_string(line) + ": " + what);
  };
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      auto b = cell.find_first_not_of(" \t\r");
      auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  auto parse_int = [&](const std::string& text, std::size_t line) {
    try {
      Rational r = parse_decimal(text);
      if (!is_integral(r)) throw std::invalid_argument("fraction");
      return r.numerator();
    } catch (const std::invalid_argument&) {
      throw fail(line, "expected an integer, got '" + text + "'");
    }
  };

  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  TraceSet set;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto cells = split(line);
    if (!header_seen) {
      header_seen = true;
      std::stringstream params(cells.front());
      std::string kv;
      bool has_capacity = false;
      while (std::getline(params, kv, ';')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw fail(line_no, "header cell must be capacity=<int>[;overhead=<int>]");
        std::string key = kv.substr(0, eq);
        std::int64_t value = parse_int(kv.substr(eq + 1), line_no);
        if (key == "capacity") {
          set.core.cycle_capacity_per_slice = value;
          has_capacity = true;
        } else if (key == "overhead") {
          set.core.per_compartment_overhead = value;
        } else {
          throw fail(line_no, "unknown header parameter '" + key + "'");
        }
      }
      if (!has_capacity) throw fail(line_no, "header is missing capacity=<int>");
      if (set.core.cycle_capacity_per_slice <= 0) throw fail(line_no, "capacity must be positive");
      if (set.core.per_compartment_overhead < 0) throw fail(line_no, "overhead must be non-negative");
      std::set<std::string> ids;
      for (std::size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty()) throw fail(line_no, "empty tenant id in column " + std::to_string(c + 1));
        if (!ids.insert(cells[c]).second) throw fail(line_no, "duplicate tenant id " + cells[c]);
        set.traces.push_back({cells[c], {}});
      }
      if (set.traces.empty()) throw fail(line_no, "header names no tenants");
      continue;
    }
    if (cells.size() != set.traces.size())
      throw fail(line_no, "expected " + std::to_string(set.traces.size()) + " columns, got " +
                              std::to_string(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::int64_t v = parse_int(cells[c], line_no);
      if (v < 0) throw fail(line_no, "negative demand for " + set.traces[c].tenant_id);
      set.traces[c].demanded_cycles.push_back(v);
    }
  }
  if (!header_seen) throw ParseError(source + ": empty trace file");
  return set;
}

}  // namespace vsecon
