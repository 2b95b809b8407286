// SPDX-License-Identifier: Apache-2.0
// twrlab: outage, throughput and diversity evaluation for two-way relay NOMA.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 numeric/oracle failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "twrnoma/config_file.hpp"
#include "twrnoma/errors.hpp"
#include "twrnoma/metrics.hpp"
#include "twrnoma/outage.hpp"
#include "twrnoma/sweep.hpp"
#include "twrnoma/table_io.hpp"
#include "twrnoma/validation.hpp"

using namespace twrnoma;

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<double> rho_db;
  double rho_min_db = 0.0;
  double rho_max_db = 60.0;
  double rho_step_db = 5.0;
  std::string sic;
  std::optional<double> varpi1;
  std::optional<double> varpi2;
  std::optional<double> omega_i_db;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  int oma_phases = kDefaultOmaPhases;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> methods;
  std::vector<std::string> signals;
};

void add_scenario_flags(CLI::App* app, CommonArgs& a) {
  app->add_option("--config", a.config_path, "Scenario file (key=value)")->check(CLI::ExistingFile);
  app->add_option("--sic", a.sic, "SIC mode: ip, p or both");
  app->add_option("--varpi1", a.varpi1, "Inter-antenna interference level at the relay");
  app->add_option("--varpi2", a.varpi2, "Inter-antenna interference level at the users");
  app->add_option("--omega-i-db", a.omega_i_db, "Residual SIC interference variance (dB)");
}

void add_grid_flags(CLI::App* app, CommonArgs& a) {
  app->add_option("--rho-min-db", a.rho_min_db, "First SNR grid point (dB)");
  app->add_option("--rho-max-db", a.rho_max_db, "Last SNR grid point (dB)");
  app->add_option("--rho-step-db", a.rho_step_db, "SNR grid step (dB)");
}

void add_mc_flags(CLI::App* app, CommonArgs& a) {
  app->add_option("--trials", a.trials, "Monte Carlo trials per point");
  app->add_option("--seed", a.seed, "Monte Carlo seed");
  app->add_option("--threads", a.threads, "Worker threads (0 = all cores)");
}

void add_output_flags(CLI::App* app, CommonArgs& a) {
  app->add_option("--out", a.out, "Output path (stdout when omitted)");
  app->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

struct Scenario {
  SystemConfig config;
  std::vector<SicMode> modes;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
};

Scenario resolve(const CommonArgs& a) {
  Scenario s;
  if (!a.config_path.empty()) {
    const ScenarioFile file = load_scenario(a.config_path);
    s.config = file.config;
    if (file.trials) s.trials = *file.trials;
    if (file.seed) s.seed = *file.seed;
  }
  if (a.rho_db) s.config.rho_db = *a.rho_db;
  if (a.varpi1) s.config.varpi1 = *a.varpi1;
  if (a.varpi2) s.config.varpi2 = *a.varpi2;
  if (a.omega_i_db) s.config.omega_i_db = *a.omega_i_db;
  if (a.trials) s.trials = *a.trials;
  if (a.seed) s.seed = *a.seed;

  if (a.sic == "both" || (a.sic.empty() && a.config_path.empty())) {
    s.modes = {SicMode::imperfect, SicMode::perfect};
  } else if (a.sic.empty()) {
    s.modes = {s.config.sic_mode};
  } else {
    s.modes = {parse_sic_mode(a.sic)};
  }
  s.config.sic_mode = s.modes.front();
  s.config.validate();
  return s;
}

SweepSpec make_spec(const CommonArgs& a, const Scenario& s, std::vector<SweepMethod> default_methods,
                    std::vector<Signal> default_signals) {
  SweepSpec spec;
  spec.base = s.config;
  spec.rho_min_db = a.rho_min_db;
  spec.rho_max_db = a.rho_max_db;
  spec.rho_step_db = a.rho_step_db;
  spec.modes = s.modes;
  spec.trials = s.trials;
  spec.seed = s.seed;
  spec.threads = a.threads;
  spec.oma_phases = a.oma_phases;
  spec.methods = std::move(default_methods);
  spec.signals = std::move(default_signals);
  if (!a.methods.empty()) {
    spec.methods.clear();
    for (const auto& m : a.methods) spec.methods.push_back(parse_sweep_method(m));
  }
  if (!a.signals.empty()) {
    spec.signals.clear();
    for (const auto& x : a.signals) spec.signals.push_back(parse_signal(x));
  }
  spec.validate();
  return spec;
}

void emit(const CommonArgs& a, const std::vector<CurveRow>& rows) {
  const TableFormat format = parse_table_format(a.format);
  if (a.out.empty()) {
    std::cout << format_table(rows, format);
  } else {
    write_table_file(a.out, rows, format);
  }
}

std::filesystem::path panel_path(const std::string& out, const std::string& label, const std::string& ext) {
  std::filesystem::path p(out);
  std::filesystem::path stem = p.parent_path() / p.stem();
  return stem.string() + "_" + label + "." + ext;
}

void report_crossovers(const SweepSpec& spec) {
  const auto grid = rho_grid(spec.rho_min_db, spec.rho_max_db, spec.rho_step_db);
  for (Signal signal : spec.signals) {
    for (SicMode mode : spec.modes) {
      const auto rho_star = noma_oma_crossover(spec.base, signal, mode, grid, spec.oma_phases);
      std::cerr << fmt::format("crossover {} {}: {}\n", to_string(signal), to_string(mode),
                               rho_star ? fmt::format("{:.6f} dB", *rho_star) : std::string("none"));
    }
  }
}

bool has_method(const SweepSpec& spec, SweepMethod m) {
  for (auto x : spec.methods) {
    if (x == m) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-way relay NOMA outage and throughput laboratory"};
  app.require_subcommand(1);

  CommonArgs a;
  std::size_t validate_configs = 200;
  double div_lo = 50.0, div_hi = 60.0;
  int figure_id = 1;

  auto* outage = app.add_subcommand("outage", "Outage probability at one SNR");
  add_scenario_flags(outage, a);
  add_mc_flags(outage, a);
  add_output_flags(outage, a);
  outage->add_option("--rho-db", a.rho_db, "Transmit SNR (dB)");
  outage->add_option("--methods", a.methods, "closed, asymptotic, mc, quad, oma");
  outage->add_option("--signals", a.signals, "x1..x4");
  outage->add_option("--oma-phases", a.oma_phases, "Orthogonal phases of the OMA baseline");

  auto* sweep = app.add_subcommand("sweep", "Outage probability over an SNR grid");
  add_scenario_flags(sweep, a);
  add_grid_flags(sweep, a);
  add_mc_flags(sweep, a);
  add_output_flags(sweep, a);
  sweep->add_option("--methods", a.methods, "closed, asymptotic, mc, quad, oma");
  sweep->add_option("--signals", a.signals, "x1..x4");
  sweep->add_option("--oma-phases", a.oma_phases, "Orthogonal phases of the OMA baseline");

  auto* throughput = app.add_subcommand("throughput", "Delay-limited throughput over an SNR grid");
  add_scenario_flags(throughput, a);
  add_grid_flags(throughput, a);
  add_mc_flags(throughput, a);
  add_output_flags(throughput, a);
  throughput->add_option("--methods", a.methods, "Extra curves: mc, oma");
  throughput->add_option("--oma-phases", a.oma_phases, "Orthogonal phases of the OMA baseline");

  auto* diversity = app.add_subcommand("diversity", "High-SNR slope of the closed-form outage");
  add_scenario_flags(diversity, a);
  diversity->add_option("--rho-lo-db", div_lo, "Lower SNR (dB, >= 40)");
  diversity->add_option("--rho-hi-db", div_hi, "Upper SNR (dB)");
  diversity->add_option("--signals", a.signals, "x1..x4");

  auto* validate = app.add_subcommand("validate", "Closed form against quadrature on random scenarios");
  validate->add_option("--configs", validate_configs, "Number of random scenarios");
  validate->add_option("--seed", a.seed, "Scenario seed");

  auto* figure = app.add_subcommand("figure", "Reference figure presets");
  figure->add_option("--id", figure_id, "Figure 1..4")->required()->check(CLI::Range(1, 4));
  add_mc_flags(figure, a);
  add_output_flags(figure, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*outage) {
      const Scenario s = resolve(a);
      CommonArgs point = a;
      point.rho_min_db = point.rho_max_db = s.config.rho_db;
      point.rho_step_db = 1.0;
      const SweepSpec spec = make_spec(point, s, {SweepMethod::closed},
                                       {Signal::x1, Signal::x2, Signal::x3, Signal::x4});
      emit(a, run_sweep(spec));
    } else if (*sweep) {
      const Scenario s = resolve(a);
      const SweepSpec spec = make_spec(a, s, {SweepMethod::closed}, {Signal::x1, Signal::x2});
      const auto rows = run_sweep(spec);
      emit(a, rows);
      if (has_method(spec, SweepMethod::oma)) report_crossovers(spec);
    } else if (*throughput) {
      const Scenario s = resolve(a);
      const SweepSpec spec = make_spec(a, s, {SweepMethod::closed},
                                       {Signal::x1, Signal::x2, Signal::x3, Signal::x4});
      emit(a, run_throughput_sweep(spec));
    } else if (*diversity) {
      const Scenario s = resolve(a);
      std::vector<Signal> signals{Signal::x1, Signal::x2, Signal::x3, Signal::x4};
      if (!a.signals.empty()) {
        signals.clear();
        for (const auto& x : a.signals) signals.push_back(parse_signal(x));
      }
      std::cout << "signal,sic_mode,rho_lo_db,rho_hi_db,diversity\n";
      for (Signal signal : signals) {
        for (SicMode mode : s.modes) {
          SystemConfig c = s.config;
          c.sic_mode = mode;
          const double d = diversity_order_estimate(
              [&](double rho_db) {
                c.rho_db = rho_db;
                return outage_probability(c, signal);
              },
              div_lo, div_hi);
          std::cout << fmt::format("{},{},{},{},{}\n", to_string(signal), to_string(mode), div_lo, div_hi, d);
        }
      }
    } else if (*validate) {
      const AgreementReport r = run_oracle_agreement(validate_configs, a.seed.value_or(0));
      std::cout << fmt::format("configs {} comparisons {} near-degenerate {}\n", r.configs, r.comparisons,
                               r.near_degenerate);
      std::cout << fmt::format("max relative error: distinct {:.3e}, near-degenerate {:.3e}\n",
                               r.max_rel_distinct, r.max_rel_near_degenerate);
      for (const auto& f : r.failures) {
        std::cout << fmt::format("FAIL config {} {} {}: closed {:.17g} quad {:.17g} rel {:.3e}\n", f.config_index,
                                 to_string(f.signal), to_string(f.config.sic_mode), f.closed, f.quad, f.rel_error);
      }
      if (!r.failures.empty()) return 2;
    } else if (*figure) {
      const std::uint64_t trials = a.trials.value_or(1'000'000);
      const std::uint64_t seed = a.seed.value_or(0);
      const auto panels = figure_preset(figure_id, trials, seed, a.threads);
      const TableFormat format = parse_table_format(a.format);
      for (const auto& panel : panels) {
        if (a.out.empty()) {
          if (panels.size() > 1) std::cout << "# panel " << panel.label << '\n';
          std::cout << format_table(panel.rows, format);
        } else {
          const auto path = panels.size() > 1 ? panel_path(a.out, panel.label, a.format)
                                              : std::filesystem::path(a.out);
          write_table_file(path, panel.rows, format);
          std::cerr << "wrote " << path.string() << '\n';
        }
      }
      if (figure_id == 1) {
        SweepSpec spec = figure_one_spec(trials, seed, a.threads);
        spec.signals = {Signal::x1};
        report_crossovers(spec);
      }
    }
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
