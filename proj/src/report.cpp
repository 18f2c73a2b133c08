#include "vsecon/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vsecon {

using nlohmann::ordered_json;

namespace {

using Row = std::vector<std::string>;

std::string aligned_table(const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  std::ostringstream out;
  auto emit = [&](const Row& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  };
  emit(header);
  Row rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& r : rows) emit(r);
  return out.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv(const Row& header, const std::vector<Row>& rows) {
  std::ostringstream out;
  auto emit = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_cell(r[c]);
    out << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out.str();
}

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  return parse_decimal(text.substr(0, slash)) / parse_decimal(text.substr(slash + 1));
}

AllocationPolicy policy_from(const std::string& name) {
  auto p = parse_policy(name);
  if (!p) throw std::invalid_argument("unknown policy " + name);
  return *p;
}

VswitchBilling basis_from(const std::string& name) {
  auto b = parse_vswitch_billing(name);
  if (!b) throw std::invalid_argument("unknown billing basis " + name);
  return *b;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const Row kRevenueHeader = {"policy",         "server_count_effective", "new_servers",  "displaced_weight",
                            "workload_income", "vswitch_income",        "total_income", "host_expense",
                            "net_revenue",    "capital_cost"};

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "table") return ReportFormat::Table;
  return std::nullopt;
}

std::string percent_text(const Rational& fraction) {
  Rational pct = fraction * 100;
  if (auto d = exact_decimal(pct)) return *d;
  return "~" + rounded_decimal(pct, 6);
}

std::string format_percent_delta(const std::optional<Rational>& delta) {
  if (!delta) return "-";
  const std::string sign = *delta >= 0 ? "+" : "-";
  const Rational mag = *delta >= 0 ? *delta : -*delta;
  if (auto d = exact_decimal(mag)) return sign + *d + "%";
  return "~" + sign + rounded_decimal(mag, 6) + "%";
}

ordered_json to_json(const RevenueReport& r) {
  ordered_json j;
  j["policy"] = policy_name(r.policy);
  j["server_count_effective"] = r.server_count_effective;
  j["new_servers"] = r.new_servers;
  j["displaced_weight"] = to_string(r.displaced_weight);
  j["workload_income"] = r.workload_income.dollars_string();
  j["vswitch_income"] = r.vswitch_income.dollars_string();
  j["total_income"] = r.total_income().dollars_string();
  j["host_expense"] = r.host_expense.dollars_string();
  j["net_revenue"] = r.net_revenue.dollars_string();
  j["capital_cost"] = r.capital_cost.dollars_string();
  return j;
}

RevenueReport revenue_report_from_json(const nlohmann::json& j) {
  RevenueReport r;
  r.policy = policy_from(j.at("policy").get<std::string>());
  r.server_count_effective = j.at("server_count_effective").get<std::int64_t>();
  r.new_servers = j.at("new_servers").get<std::int64_t>();
  r.displaced_weight = parse_fraction(j.at("displaced_weight").get<std::string>());
  r.workload_income = Money::parse_dollars(j.at("workload_income").get<std::string>());
  r.vswitch_income = Money::parse_dollars(j.at("vswitch_income").get<std::string>());
  r.host_expense = Money::parse_dollars(j.at("host_expense").get<std::string>());
  r.net_revenue = Money::parse_dollars(j.at("net_revenue").get<std::string>());
  r.capital_cost = Money::parse_dollars(j.at("capital_cost").get<std::string>());
  return r;
}

ordered_json to_json(const OptionComparison& c) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : c.rows) {
    ordered_json j;
    j["policy"] = policy_name(row.policy);
    j["net_revenue"] = row.net_revenue.dollars_string();
    if (row.delta_vs_baseline_percent) {
      j["delta_vs_baseline"] = format_percent_delta(row.delta_vs_baseline_percent);
      j["delta_percent_exact"] = to_string(*row.delta_vs_baseline_percent);
    } else {
      j["delta_vs_baseline"] = nullptr;
      j["delta_percent_exact"] = nullptr;
    }
    rows.push_back(std::move(j));
  }
  ordered_json out;
  out["options"] = std::move(rows);
  return out;
}

OptionComparison option_comparison_from_json(const nlohmann::json& j) {
  OptionComparison c;
  for (const auto& row : j.at("options")) {
    OptionRow r{policy_from(row.at("policy").get<std::string>()),
                Money::parse_dollars(row.at("net_revenue").get<std::string>()), std::nullopt};
    if (!row.at("delta_percent_exact").is_null())
      r.delta_vs_baseline_percent = parse_fraction(row.at("delta_percent_exact").get<std::string>());
    c.rows.push_back(r);
  }
  return c;
}

ordered_json to_json(const std::vector<TenantBill>& bills) {
  ordered_json rows = ordered_json::array();
  Money total;
  for (const auto& b : bills) {
    ordered_json j;
    j["tenant_id"] = b.tenant_id;
    j["usage_fraction"] = to_string(b.usage_fraction);
    j["usage_percent"] = percent_text(b.usage_fraction);
    j["basis"] = to_string(b.basis);
    j["vswitch_charge"] = b.vswitch_charge.dollars_string();
    total += b.vswitch_charge;
    rows.push_back(std::move(j));
  }
  ordered_json out;
  out["bills"] = std::move(rows);
  out["total_vswitch_charge"] = total.dollars_string();
  return out;
}

std::vector<TenantBill> tenant_bills_from_json(const nlohmann::json& j) {
  std::vector<TenantBill> bills;
  for (const auto& row : j.at("bills")) {
    bills.push_back({row.at("tenant_id").get<std::string>(),
                     Money::parse_dollars(row.at("vswitch_charge").get<std::string>()),
                     basis_from(row.at("basis").get<std::string>()),
                     parse_fraction(row.at("usage_fraction").get<std::string>())});
  }
  return bills;
}

std::string render(const RevenueReport& r, ReportFormat fmt) {
  const Row values = {std::string(policy_name(r.policy)),
                      std::to_string(r.server_count_effective),
                      std::to_string(r.new_servers),
                      to_string(r.displaced_weight),
                      r.workload_income.dollars_string(),
                      r.vswitch_income.dollars_string(),
                      r.total_income().dollars_string(),
                      r.host_expense.dollars_string(),
                      r.net_revenue.dollars_string(),
                      r.capital_cost.dollars_string()};
  switch (fmt) {
    case ReportFormat::Json: return dump(to_json(r));
    case ReportFormat::Csv: return csv(kRevenueHeader, {values});
    case ReportFormat::Table: {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < values.size(); ++i) rows.push_back({kRevenueHeader[i], values[i]});
      return aligned_table({"field", "value"}, rows);
    }
  }
  return {};
}

RevenueReport revenue_report_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::string line;
  std::getline(in, header);
  std::getline(in, line);
  auto split = [](const std::string& s) {
    Row cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  Row names = split(header);
  Row cells = split(line);
  if (names != kRevenueHeader || cells.size() != names.size())
    throw std::invalid_argument("not a revenue report csv");
  nlohmann::json j;
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = cells[i];
  j["server_count_effective"] = std::stoll(cells[1]);
  j["new_servers"] = std::stoll(cells[2]);
  return revenue_report_from_json(j);
}

std::string render(const OptionComparison& c, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) return dump(to_json(c));
  std::vector<Row> rows;
  for (const auto& r : c.rows)
    rows.push_back({std::string(policy_name(r.policy)), r.net_revenue.dollars_string(),
                    format_percent_delta(r.delta_vs_baseline_percent)});
  const Row header = {"policy", "net_revenue", "delta_vs_baseline"};
  return fmt == ReportFormat::Csv ? csv(header, rows) : aligned_table(header, rows);
}

std::string render(const std::vector<TenantBill>& bills, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) return dump(to_json(bills));
  std::vector<Row> rows;
  Money total;
  for (const auto& b : bills) {
    rows.push_back({b.tenant_id, percent_text(b.usage_fraction), std::string(to_string(b.basis)),
                    b.vswitch_charge.dollars_string()});
    total += b.vswitch_charge;
  }
  const Row header = {"tenant", "usage_percent", "basis", "vswitch_charge"};
  if (fmt == ReportFormat::Csv) return csv(header, rows);
  rows.push_back({"total", "", "", total.dollars_string()});
  return aligned_table(header, rows);
}

std::string render(const std::vector<MeterSummaryRow>& rows, ReportFormat fmt) {
  const bool with_workload = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.workload_granted; });
  if (fmt == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["tenant_id"] = r.record.tenant_id;
      j["slices"] = r.record.slice_count;
      j["capacity_per_slice"] = r.record.capacity_per_slice;
      j["granted_cycles"] = r.record.granted_cycles;
      j["total_granted"] = r.record.total_granted;
      j["usage_fraction"] = to_string(r.record.usage_fraction);
      j["usage_percent"] = percent_text(r.record.usage_fraction);
      if (r.workload_granted) j["workload_granted"] = *r.workload_granted;
      j["basis"] = to_string(r.bill.basis);
      j["vswitch_charge"] = r.bill.vswitch_charge.dollars_string();
      arr.push_back(std::move(j));
    }
    ordered_json out;
    out["meters"] = std::move(arr);
    return dump(out);
  }
  Row header = {"tenant", "slices", "total_granted", "usage_percent"};
  if (with_workload) header.push_back("workload_granted");
  header.insert(header.end(), {"basis", "vswitch_charge"});
  std::vector<Row> out;
  for (const auto& r : rows) {
    Row row = {r.record.tenant_id, std::to_string(r.record.slice_count), std::to_string(r.record.total_granted),
               percent_text(r.record.usage_fraction)};
    if (with_workload) row.push_back(r.workload_granted ? std::to_string(*r.workload_granted) : "");
    row.insert(row.end(), {std::string(to_string(r.bill.basis)), r.bill.vswitch_charge.dollars_string()});
    out.push_back(std::move(row));
  }
  return fmt == ReportFormat::Csv ? csv(header, out) : aligned_table(header, out);
}

std::string render(const std::vector<FeasibilityRow>& rows, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["policy"] = policy_name(r.policy);
      j["feasible"] = r.ok();
      j["workload_vms_per_server"] = r.layout.workload_vm_count;
      j["vswitch_vms_per_server"] = r.layout.vswitch_vm_count;
      j["vswitch_vm_capacity"] = r.vf.vswitch_vm_capacity;
      j["pf_count"] = r.pf_count;
      j["min_pfs_required"] = r.vf.min_pfs_required;
      ordered_json v = ordered_json::array();
      for (const auto& viol : r.violations) v.push_back(viol.describe());
      if (!r.vf.feasible) {
        v.push_back("vf capacity exceeded: " + std::to_string(r.layout.vswitch_vm_count) + " vswitch VMs > " +
                    std::to_string(r.vf.vswitch_vm_capacity));
      }
      j["violations"] = std::move(v);
      arr.push_back(std::move(j));
    }
    ordered_json out;
    out["checks"] = std::move(arr);
    return dump(out);
  }
  const Row header = {"policy", "status", "workload_vms", "vswitch_vms", "vf_capacity", "min_pfs", "detail"};
  std::vector<Row> out;
  for (const auto& r : rows) {
    std::string detail = "vswitch VMs/server = " + std::to_string(r.layout.vswitch_vm_count) +
                         (r.vf.feasible ? " <= " : " > ") + std::to_string(r.vf.vswitch_vm_capacity);
    for (const auto& viol : r.violations) detail += "; " + viol.describe();
    out.push_back({std::string(policy_name(r.policy)), r.ok() ? "feasible" : "infeasible",
                   std::to_string(r.layout.workload_vm_count), std::to_string(r.layout.vswitch_vm_count),
                   std::to_string(r.vf.vswitch_vm_capacity), std::to_string(r.vf.min_pfs_required), detail});
  }
  return fmt == ReportFormat::Csv ? csv(header, out) : aligned_table(header, out);
}

}  // namespace vsecon
