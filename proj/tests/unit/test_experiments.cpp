// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "twrnoma/errors.hpp"
#include "twrnoma/oma.hpp"
#include "twrnoma/outage.hpp"
#include "twrnoma/sweep.hpp"
#include "twrnoma/table_io.hpp"

using namespace twrnoma;

TEST_CASE("OMA baseline") {
  SystemConfig c;
  c.rates = {0, 0, 0, 0};
  CHECK(oma_outage(c, Signal::x1) == 0.0);
  SystemConfig d;
  d.rho_db = -60.0;
  CHECK(std::abs(oma_outage(d, Signal::x1) - 1.0) < 1e-6);
  SystemConfig e;
  const double g = std::exp2(0.4) - 1.0;
  CHECK(oma_outage(e, Signal::x1) == doctest::Approx(1.0 - std::exp(-2.0 * g / (1000.0 * 0.25))).epsilon(1e-13));
  CHECK_THROWS_AS(oma_outage(e, Signal::x1, 0), ConfigError);
}

TEST_CASE("grid construction") {
  CHECK(rho_grid(0, 60, 10).size() == 7);
  CHECK(rho_grid(0, 0, 1).size() == 1);
  CHECK(rho_grid(0, 1, 0.1).size() == 11);
  CHECK_THROWS_AS(rho_grid(0, 10, 0), ConfigError);
  CHECK_THROWS_AS(rho_grid(10, 0, 1), ConfigError);
}

TEST_CASE("one row per grid point, signal, mode and method") {
  SweepSpec s;
  s.rho_min_db = 0;
  s.rho_max_db = 60;
  s.rho_step_db = 10;
  const auto rows = run_sweep(s);
  CHECK(rows.size() == 28);
  CHECK(rows.front().rho_db == 0.0);
  CHECK(rows.front().signal == "x1");
  CHECK(rows.front().sic_mode == "ipSIC");
  CHECK(rows.back().rho_db == 60.0);
  CHECK(rows.back().signal == "x2");
  CHECK(rows.back().sic_mode == "pSIC");
}

TEST_CASE("closed-form rows equal fresh evaluations") {
  SweepSpec s;
  s.methods = {SweepMethod::closed, SweepMethod::asymptotic};
  s.signals = {Signal::x1, Signal::x2, Signal::x3, Signal::x4};
  for (const auto& row : run_sweep(s)) {
    SystemConfig c;
    c.rho_db = row.rho_db;
    c.sic_mode = parse_sic_mode(row.sic_mode);
    const auto method = row.method == "closed" ? OutageMethod::closed : OutageMethod::asymptotic;
    CHECK(row.value == outage_probability(c, parse_signal(row.signal), method));
    CHECK_FALSE(row.ci_low.has_value());
    CHECK_FALSE(row.trials.has_value());
  }
}

TEST_CASE("sweeps are byte-identical for a fixed seed") {
  SweepSpec s;
  s.rho_step_db = 20;
  s.methods = {SweepMethod::closed, SweepMethod::mc, SweepMethod::oma};
  s.trials = 20000;
  s.seed = 7;
  const auto a = format_table(run_sweep(s), TableFormat::csv);
  s.threads = 3;
  const auto b = format_table(run_sweep(s), TableFormat::csv);
  CHECK(a == b);
  CHECK(a.rfind("rho_db,signal,sic_mode,method,value,ci_low,ci_high,trials,seed\n", 0) == 0);
  CHECK(a.find('\r') == std::string::npos);
  CHECK(a.find(",mc,") != std::string::npos);
  CHECK(a.find(",20000,7\n") != std::string::npos);
}

TEST_CASE("JSON output") {
  SweepSpec s;
  s.rho_min_db = s.rho_max_db = 30;
  s.methods = {SweepMethod::closed};
  s.signals = {Signal::x1};
  s.modes = {SicMode::perfect};
  const auto json = format_table(run_sweep(s), TableFormat::json);
  CHECK(json.find("\"signal\": \"x1\"") != std::string::npos);
  CHECK(json.find("\"ci_low\": null") != std::string::npos);
  CHECK_THROWS_AS(parse_table_format("xml"), ConfigError);
}

TEST_CASE("invalid sweeps are rejected") {
  SweepSpec s;
  s.rho_step_db = -1;
  CHECK_THROWS_AS(run_sweep(s), ConfigError);
  SweepSpec t;
  t.methods.clear();
  CHECK_THROWS_AS(run_sweep(t), ConfigError);
  CHECK_THROWS_AS(parse_sweep_method("exact"), ConfigError);
  CHECK_THROWS_AS(figure_preset(5, 1000, 1), ConfigError);
}

TEST_CASE("crossover search") {
  const std::vector<double> grid{0, 10, 20, 30};
  const auto x = find_crossover([](double r) { return 0.1 + 0.01 * r; }, [](double) { return 0.25; }, grid);
  REQUIRE(x.has_value());
  CHECK(*x == doctest::Approx(15.0).epsilon(1e-9));
  CHECK_FALSE(find_crossover([](double) { return 0.3; }, [](double) { return 0.25; }, grid).has_value());
  CHECK_FALSE(find_crossover([](double) { return 0.1; }, [](double) { return 0.25; }, grid).has_value());
}

TEST_CASE("figure 1: perfect SIC never above imperfect SIC") {
  const auto panels = figure_preset(1, 2000, 7);
  REQUIRE(panels.size() == 1);
  std::map<std::pair<double, std::string>, std::map<std::string, double>> closed;
  for (const auto& r : panels[0].rows) {
    if (r.method == "closed") closed[{r.rho_db, r.signal}][r.sic_mode] = r.value;
  }
  CHECK(closed.size() == 26);
  for (const auto& [key, modes] : closed) CHECK(modes.at("pSIC") <= modes.at("ipSIC"));
}

TEST_CASE("figure 2: the interference-free benchmark is strictly lowest") {
  const auto panels = figure_preset(2, 1000, 7);
  REQUIRE(panels.size() == 4);
  REQUIRE(panels[0].label == "varpi0");
  const auto closed_rows = [](const FigurePanel& p) {
    std::vector<double> v;
    for (const auto& r : p.rows)
      if (r.method == "closed") v.push_back(r.value);
    return v;
  };
  const auto bench = closed_rows(panels[0]);
  for (std::size_t k = 1; k < panels.size(); ++k) {
    const auto other = closed_rows(panels[k]);
    REQUIRE(other.size() == bench.size());
    for (std::size_t i = 0; i < bench.size(); ++i) CHECK(bench[i] < other[i]);
  }
}

TEST_CASE("figures 3 and 4 shapes") {
  const auto f3 = figure_preset(3, 1000, 7);
  CHECK(f3.size() == 3);
  const auto f4 = figure_preset(4, 1000, 7);
  REQUIRE(f4.size() == 2);
  for (const auto& p : f4) {
    for (const auto& r : p.rows) {
      CHECK(r.signal == "sum");
      CHECK(r.value <= 0.22 + 1e-15);
      CHECK(r.value >= 0.0);
    }
  }
}
