#pragma once

// Report rendering. Machine formats (json, csv) carry money as exact
// dollar decimal strings and rationals as "p/q" strings; both parse back
// losslessly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vsecon/billing.hpp"
#include "vsecon/metering.hpp"
#include "vsecon/placement.hpp"

namespace vsecon {

enum class ReportFormat { Json, Csv, Table };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// "+18.75%", "-3%", "~+33.333333%" for non-terminating values, "-" when absent.
std::string format_percent_delta(const std::optional<Rational>& delta);
/// Exact percent of a fraction: 1/100 -> "1".
std::string percent_text(const Rational& fraction);

nlohmann::ordered_json to_json(const RevenueReport& r);
nlohmann::ordered_json to_json(const OptionComparison& c);
nlohmann::ordered_json to_json(const std::vector<TenantBill>& bills);

RevenueReport revenue_report_from_json(const nlohmann::json& j);
OptionComparison option_comparison_from_json(const nlohmann::json& j);
std::vector<TenantBill> tenant_bills_from_json(const nlohmann::json& j);

std::string render(const RevenueReport& r, ReportFormat fmt);
std::string render(const OptionComparison& c, ReportFormat fmt);
std::string render(const std::vector<TenantBill>& bills, ReportFormat fmt);

RevenueReport revenue_report_from_csv(std::string_view csv);

// Meter summary: one row per metered compartment with its bill.
struct MeterSummaryRow {
  MeterRecord record;
  TenantBill bill;
  std::optional<std::int64_t> workload_granted;  // option 2 only
};
std::string render(const std::vector<MeterSummaryRow>& rows, ReportFormat fmt);

// Feasibility of one policy on one scenario.
struct FeasibilityRow {
  AllocationPolicy policy;
  ServerLayout layout;
  VfFeasibility vf;
  std::vector<CapViolation> violations;
  std::int64_t vswitch_vms_per_pf = 0;
  std::int64_t pf_count = 0;

  bool ok() const { return vf.feasible && violations.empty(); }
};
std::string render(const std::vector<FeasibilityRow>& rows, ReportFormat fmt);

}  // namespace vsecon
