// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twrnoma/config.hpp"
#include "twrnoma/oma.hpp"

namespace twrnoma {

enum class SweepMethod { closed, asymptotic, mc, quad, oma };

std::string_view to_string(SweepMethod m) noexcept;
SweepMethod parse_sweep_method(std::string_view text);

struct SweepSpec {
  SystemConfig base;
  double rho_min_db = 0.0;
  double rho_max_db = 60.0;
  double rho_step_db = 5.0;
  std::vector<SweepMethod> methods{SweepMethod::closed};
  std::vector<Signal> signals{Signal::x1, Signal::x2};
  std::vector<SicMode> modes{SicMode::imperfect, SicMode::perfect};
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  int oma_phases = kDefaultOmaPhases;

  void validate() const;
};

/// One output record. Outage methods carry a probability; throughput rows use
/// signal "sum" and carry BPCU. Monte Carlo rows fill the CI, trials and seed.
struct CurveRow {
  double rho_db = 0.0;
  std::string signal;
  std::string sic_mode;
  std::string method;
  double value = 0.0;
  std::optional<double> ci_low;
  std::optional<double> ci_high;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
};

/// min, min + step, ... up to max inclusive (within 1e-9 step of max).
std::vector<double> rho_grid(double min_db, double max_db, double step_db);

/// Rows ordered by grid point, then signal, then SIC mode, then method.
/// Every outage row is range-checked; a violation aborts with NumericError.
std::vector<CurveRow> run_sweep(const SweepSpec& spec);

/// Delay-limited throughput per grid point and SIC mode: method "throughput"
/// from the closed forms, "throughput_mc" when mc is among the methods, and
/// "throughput_oma" when oma is.
std::vector<CurveRow> run_throughput_sweep(const SweepSpec& spec);

/// SNR at which `noma` first rises above `baseline`, given it starts below it
/// at grid.front(). The bracketing grid interval is refined by bisection.
/// Empty when there is no such sign change on the grid.
std::optional<double> find_crossover(const std::function<double(double)>& noma,
                                     const std::function<double(double)>& baseline,
                                     const std::vector<double>& grid);

/// Crossover of the closed-form NOMA outage of `signal` against the OMA baseline.
std::optional<double> noma_oma_crossover(const SystemConfig& base, Signal signal, SicMode mode,
                                         const std::vector<double>& grid,
                                         int phases = kDefaultOmaPhases);

struct FigurePanel {
  std::string label;
  std::vector<CurveRow> rows;
};

/// Reference-figure presets 1..4 (outage vs SNR with OMA, IS-level sweep,
/// residual-IS sweep, delay-limited throughput), all on the reference parameters.
std::vector<FigurePanel> figure_preset(int id, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads = 0);

/// The sweep spec underlying figure 1; exposed for crossover reporting.
SweepSpec figure_one_spec(std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace twrnoma
