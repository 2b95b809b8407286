// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"
#include "twrnoma/metrics.hpp"
#include "twrnoma/montecarlo.hpp"
#include "twrnoma/oracle.hpp"
#include "twrnoma/outage.hpp"

namespace twrnoma {

std::string_view to_string(SweepMethod m) noexcept {
  switch (m) {
    case SweepMethod::closed: return "closed";
    case SweepMethod::asymptotic: return "asymptotic";
    case SweepMethod::mc: return "mc";
    case SweepMethod::quad: return "quad";
    case SweepMethod::oma: return "oma";
  }
  return "closed";
}

SweepMethod parse_sweep_method(std::string_view text) {
  for (auto m : {SweepMethod::closed, SweepMethod::asymptotic, SweepMethod::mc, SweepMethod::quad,
                 SweepMethod::oma}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigError(fmt::format("unknown method '{}'", text));
}

void SweepSpec::validate() const {
  base.validate();
  if (!(rho_step_db > 0.0) || !std::isfinite(rho_step_db)) throw ConfigError("rho step must be positive");
  if (!std::isfinite(rho_min_db) || !std::isfinite(rho_max_db) || rho_max_db < rho_min_db)
    throw ConfigError("rho grid is empty");
  if (methods.empty() || signals.empty() || modes.empty())
    throw ConfigError("sweep needs at least one method, signal and SIC mode");
  if (oma_phases < 1) throw ConfigError("OMA needs at least one phase");
}

std::vector<double> rho_grid(double min_db, double max_db, double step_db) {
  if (!(step_db > 0.0) || max_db < min_db) throw ConfigError("rho grid is empty");
  const auto n = static_cast<std::size_t>(std::floor((max_db - min_db) / step_db + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = min_db + static_cast<double>(i) * step_db;
  return grid;
}

namespace {

SystemConfig at_point(const SystemConfig& base, double rho_db, SicMode mode) {
  SystemConfig c = base;
  c.rho_db = rho_db;
  c.sic_mode = mode;
  return c;
}

void check_range(const CurveRow& row) {
  if (!(row.value >= 0.0 && row.value <= 1.0)) {
    throw NumericError(fmt::format("{} {} {} at {} dB out of [0,1]: {}", row.method, row.signal,
                                   row.sic_mode, row.rho_db, row.value));
  }
}

McOptions mc_options(const SweepSpec& spec) {
  McOptions o;
  o.trials = spec.trials;
  o.seed = spec.seed;
  o.threads = spec.threads;
  return o;
}

// Monte Carlo for one grid point; each user group is simulated once and the
// strong/weak estimates are shared by its two signals.
class McCache {
 public:
  McCache(const SystemConfig& config, McOptions opts) : config_(config), opts_(opts) {}

  const OutageEstimate& get(Signal s) {
    const PairRoles roles = roles_for(s);
    const int group = roles.l == 1 ? 0 : 1;
    if (!pairs_[group]) pairs_[group] = mc_outage(config_, roles, opts_);
    return role_of(s) == SignalRole::strong ? pairs_[group]->strong : pairs_[group]->weak;
  }

 private:
  SystemConfig config_;
  McOptions opts_;
  std::array<std::optional<OutagePairEstimate>, 2> pairs_;
};

}  // namespace

std::vector<CurveRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<CurveRow> rows;
  for (double rho_db : rho_grid(spec.rho_min_db, spec.rho_max_db, spec.rho_step_db)) {
    std::vector<McCache> caches;
    caches.reserve(spec.modes.size());
    for (SicMode mode : spec.modes) caches.emplace_back(at_point(spec.base, rho_db, mode), mc_options(spec));

    for (Signal signal : spec.signals) {
      for (std::size_t mi = 0; mi < spec.modes.size(); ++mi) {
        const SicMode mode = spec.modes[mi];
        const SystemConfig config = at_point(spec.base, rho_db, mode);
        for (SweepMethod method : spec.methods) {
          CurveRow row;
          row.rho_db = rho_db;
          row.signal = std::string(to_string(signal));
          row.sic_mode = std::string(to_string(mode));
          row.method = std::string(to_string(method));
          switch (method) {
            case SweepMethod::closed:
              row.value = outage_probability(config, signal, OutageMethod::closed);
              break;
            case SweepMethod::asymptotic:
              row.value = outage_probability(config, signal, OutageMethod::asymptotic);
              break;
            case SweepMethod::quad:
              row.value = quad_outage_probability(config, signal);
              break;
            case SweepMethod::oma:
              row.value = oma_outage(config, signal, spec.oma_phases);
              break;
            case SweepMethod::mc: {
              const OutageEstimate& e = caches[mi].get(signal);
              row.value = e.p_hat;
              row.ci_low = e.ci_low;
              row.ci_high = e.ci_high;
              row.trials = e.trials;
              row.seed = e.seed;
              break;
            }
          }
          check_range(row);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::vector<CurveRow> run_throughput_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto has = [&](SweepMethod m) {
    return std::find(spec.methods.begin(), spec.methods.end(), m) != spec.methods.end();
  };
  std::vector<CurveRow> rows;
  for (double rho_db : rho_grid(spec.rho_min_db, spec.rho_max_db, spec.rho_step_db)) {
    for (SicMode mode : spec.modes) {
      const SystemConfig config = at_point(spec.base, rho_db, mode);
      const auto push = [&](std::string method, double value) {
        CurveRow row;
        row.rho_db = rho_db;
        row.signal = "sum";
        row.sic_mode = std::string(to_string(mode));
        row.method = std::move(method);
        row.value = value;
        rows.push_back(std::move(row));
      };
      push("throughput", throughput_delay_limited(config, closed_form_outages(config)));
      if (has(SweepMethod::mc)) {
        McCache cache(config, mc_options(spec));
        const std::array<double, 4> p{cache.get(Signal::x1).p_hat, cache.get(Signal::x2).p_hat,
                                      cache.get(Signal::x3).p_hat, cache.get(Signal::x4).p_hat};
        push("throughput_mc", throughput_delay_limited(config, p));
        rows.back().trials = spec.trials;
        rows.back().seed = spec.seed;
      }
      if (has(SweepMethod::oma)) {
        push("throughput_oma", throughput_delay_limited(config, oma_outages(config, spec.oma_phases)));
      }
    }
  }
  return rows;
}

std::optional<double> find_crossover(const std::function<double(double)>& noma,
                                     const std::function<double(double)>& baseline,
                                     const std::vector<double>& grid) {
  if (grid.size() < 2) return std::nullopt;
  const auto gap = [&](double x) { return noma(x) - baseline(x); };
  if (!(gap(grid.front()) < 0.0)) return std::nullopt;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (gap(grid[i]) < 0.0) continue;
    double lo = grid[i - 1];
    double hi = grid[i];
    for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

std::optional<double> noma_oma_crossover(const SystemConfig& base, Signal signal, SicMode mode,
                                         const std::vector<double>& grid, int phases) {
  return find_crossover(
      [&](double rho_db) { return outage_probability(at_point(base, rho_db, mode), signal); },
      [&](double rho_db) { return oma_outage(at_point(base, rho_db, mode), signal, phases); }, grid);
}

SweepSpec figure_one_spec(std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  SweepSpec s;
  s.base = SystemConfig{};
  s.rho_min_db = 0.0;
  s.rho_max_db = 60.0;
  s.rho_step_db = 5.0;
  s.methods = {SweepMethod::closed, SweepMethod::asymptotic, SweepMethod::mc, SweepMethod::oma};
  s.signals = {Signal::x1, Signal::x2};
  s.modes = {SicMode::imperfect, SicMode::perfect};
  s.trials = trials;
  s.seed = seed;
  s.threads = threads;
  return s;
}

std::vector<FigurePanel> figure_preset(int id, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  const SweepSpec base = figure_one_spec(trials, seed, threads);
  std::vector<FigurePanel> panels;
  switch (id) {
    case 1:
      panels.push_back({"main", run_sweep(base)});
      break;
    case 2:
      for (auto [label, w] : std::array<std::pair<const char*, double>, 4>{
               {{"varpi0", 0.0}, {"varpi0.01", 0.01}, {"varpi0.05", 0.05}, {"varpi0.1", 0.1}}}) {
        SweepSpec s = base;
        s.base.varpi1 = s.base.varpi2 = w;
        s.methods = {SweepMethod::closed, SweepMethod::mc};
        panels.push_back({label, run_sweep(s)});
      }
      break;
    case 3:
      for (auto [label, oi] : std::array<std::pair<const char*, double>, 3>{
               {{"omega_i-20dB", -20.0}, {"omega_i-10dB", -10.0}, {"omega_i0dB", 0.0}}}) {
        SweepSpec s = base;
        s.base.varpi1 = s.base.varpi2 = 0.0;
        s.base.omega_i_db = oi;
        s.methods = {SweepMethod::closed, SweepMethod::mc};
        s.modes = {SicMode::imperfect};
        panels.push_back({label, run_sweep(s)});
      }
      break;
    case 4:
      for (auto [label, oi] : std::array<std::pair<const char*, double>, 2>{
               {{"omega_i-20dB", -20.0}, {"omega_i-10dB", -10.0}}}) {
        SweepSpec s = base;
        s.base.omega_i_db = oi;
        s.methods = {SweepMethod::closed, SweepMethod::mc, SweepMethod::oma};
        s.signals = {Signal::x1, Signal::x2, Signal::x3, Signal::x4};
        panels.push_back({label, run_throughput_sweep(s)});
      }
      break;
    default:
      throw ConfigError(fmt::format("unknown figure id {} (expected 1..4)", id));
  }
  return panels;
}

}  // namespace twrnoma
