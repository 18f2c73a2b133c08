#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "vsecon/scenario_io.hpp"

using namespace vsecon;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(std::string_view yaml) {
  try {
    parse_scenario_text(yaml, "s.yaml");
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("paper-defaults bundle") {
  FleetScenario s = parse_scenario("paper-defaults");
  CHECK(s.server_count == 100);
  CHECK(s.server_spec.total_cores == 12);
  CHECK(s.pricing.vm_core_rate == Money::from_cents(1));
  CHECK(s.pricing.host_core_cost_rate == Money::from_cents(1));
  CHECK(s.pricing.server_capital_cost == Money::from_dollars(2000));
  CHECK(s.fleet_vswitch_utilization == Rational(1, 2));
  REQUIRE(s.tenants_per_server_template.size() == 6);
  const std::int64_t percents[] = {1, 2, 2, 5, 10, 30};
  Rational sum = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(s.tenants_per_server_template[i].vswitch_usage_fraction == Rational(percents[i], 100));
    sum += s.tenants_per_server_template[i].vswitch_usage_fraction;
  }
  CHECK(sum == s.fleet_vswitch_utilization);
  CHECK(s == FleetScenario{s});
}

TEST_CASE("checked-in scenario files match the bundled ones") {
  for (const char* name : {"paper-defaults", "empty-fleet"}) {
    const std::string path = std::string(VSECON_SOURCE_DIR) + "/scenarios/" + name + ".yaml";
    CHECK(slurp(path) == std::string(*bundled_scenario(name)));
    CHECK(parse_scenario(path) == parse_scenario(name));
  }
}

TEST_CASE("empty tenants list is valid") {
  FleetScenario s = parse_scenario("empty-fleet");
  CHECK(s.server_count == 0);
  CHECK(s.tenants_per_server_template.empty());
}

TEST_CASE("parse errors name the key and line") {
  const std::string over = error_of("fleet:\n  server_count: 1\n  cores_per_server: 12\ntenants:\n"
                                    "  - {id: a, workload_vms: 2, vswitch_usage_percent: 101}\n");
  CHECK(over.find("vswitch_usage_percent") != std::string::npos);
  CHECK(over.find("s.yaml:5") != std::string::npos);

  const std::string missing = error_of("fleet:\n  cores_per_server: 12\n");
  CHECK(missing.find("fleet.server_count") != std::string::npos);
  CHECK(missing.find("missing required key") != std::string::npos);

  const std::string nan = error_of("fleet:\n  server_count: lots\n  cores_per_server: 12\n");
  CHECK(nan.find("fleet.server_count") != std::string::npos);
  CHECK(nan.find("s.yaml:2") != std::string::npos);
  CHECK(nan.find("non-numeric") != std::string::npos);

  const std::string unknown = error_of("fleet:\n  server_count: 1\n  cores_per_server: 12\n  color: red\n");
  CHECK(unknown.find("fleet.color") != std::string::npos);
  CHECK(unknown.find("unknown key") != std::string::npos);

  CHECK(error_of("fleet:\n  server_count: 1\n  cores_per_server: 12\nutilization_percent: -1\n").find("utilization_percent") !=
        std::string::npos);
  CHECK(error_of("fleet:\n  server_count: 1.5\n  cores_per_server: 12\n").find("integer") != std::string::npos);
  CHECK(error_of("pricing:\n  vswitch_billing: hourly\nfleet:\n  server_count: 1\n  cores_per_server: 12\n")
            .find("pricing.vswitch_billing") != std::string::npos);
  CHECK(!error_of("fleet: [1, 2\n").empty());
  CHECK(!error_of("fleet:\n  server_count: 1\n  cores_per_server: 12\ntenants:\n  - {id: a, workload_vms: 2, vswitch_usage_percent: 1}\n"
                  "  - {id: a, workload_vms: 2, vswitch_usage_percent: 1}\n").empty());
  CHECK_THROWS_AS(parse_scenario("/nonexistent/file.yaml"), ParseError);
}

TEST_CASE("fractions and decimals are exact") {
  auto s = parse_scenario_text("fleet:\n  server_count: 1\n  cores_per_server: 12\nutilization_percent: 100/3\n"
                               "pricing:\n  vm_core_rate_cents_per_hour: 0.125\n");
  CHECK(s.fleet_vswitch_utilization == Rational(1, 3));
  CHECK(s.pricing.vm_core_rate.milli_cents() == 125);
}

TEST_CASE("parse -> serialize -> parse is the identity") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    FleetScenario s;
    s.server_count = static_cast<std::int64_t>(rng() % 1000);
    s.server_spec.total_cores = 1 + static_cast<std::int64_t>(rng() % 128);
    s.server_spec.nic.pf_count = 1 + static_cast<std::int64_t>(rng() % 8);
    s.server_spec.nic.vswitch_vms_per_pf = 1 + static_cast<std::int64_t>(rng() % 64);
    s.pricing.vm_core_rate = Money::from_milli_cents(1 + static_cast<std::int64_t>(rng() % 100000));
    s.pricing.host_core_cost_rate = Money::from_milli_cents(static_cast<std::int64_t>(rng() % 100000));
    s.pricing.server_capital_cost = Money::from_milli_cents(static_cast<std::int64_t>(rng() % 1'000'000'000));
    s.pricing.period_days = 1 + static_cast<std::int64_t>(rng() % 400);
    s.pricing.vswitch_billing = rng() % 2 ? VswitchBilling::CpuCycle : VswitchBilling::TimeSlice;
    s.fleet_vswitch_utilization = Rational(static_cast<std::int64_t>(rng() % 7), 7);
    if (rng() % 2) s.fleet_vm_cap_per_server = static_cast<std::int64_t>(rng() % 100);
    if (rng() % 2) s.fleet_vm_cap_total = static_cast<std::int64_t>(rng() % 10000);
    const std::size_t tenants = rng() % 5;
    for (std::size_t t = 0; t < tenants; ++t) {
      s.tenants_per_server_template.push_back(
          {"tenant " + std::to_string(t) + (t % 2 ? ": \"quoted\"" : ""), 1 + static_cast<std::int64_t>(rng() % 6),
           Rational(static_cast<std::int64_t>(rng() % 301), 300)});
    }
    const std::string text = serialize_scenario(s);
    CAPTURE(text);
    const FleetScenario back = parse_scenario_text(text);
    REQUIRE(back == s);
    REQUIRE(serialize_scenario(back) == text);
  }
}

TEST_CASE("trace files") {
  auto set = parse_traces_text("capacity=100;overhead=2,a,b\n10,20\n# comment\n30,40\n");
  CHECK(set.core.cycle_capacity_per_slice == 100);
  CHECK(set.core.per_compartment_overhead == 2);
  REQUIRE(set.traces.size() == 2);
  CHECK(set.traces[1].tenant_id == "b");
  CHECK(set.traces[1].demanded_cycles == std::vector<std::int64_t>{20, 40});

  CHECK_THROWS_AS(parse_traces_text("a,b\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_traces_text("capacity=100,a,b\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_traces_text("capacity=100,a,b\n1,-2\n"), ParseError);
  CHECK_THROWS_AS(parse_traces_text("capacity=100,a,a\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_traces_text("capacity=0,a\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_traces_text(""), ParseError);
  try {
    parse_traces_text("capacity=100,a\n1\nx\n", "t.csv");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("t.csv:3") != std::string::npos);
  }
}
