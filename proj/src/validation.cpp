// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "twrnoma/derived_constants.hpp"
#include "twrnoma/oracle.hpp"
#include "twrnoma/outage.hpp"

namespace twrnoma {

namespace {

double relative_gap(const std::vector<double>& rates) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rates.size(); ++i) {
    for (std::size_t j = i + 1; j < rates.size(); ++j) {
      gap = std::min(gap, std::abs(rates[i] - rates[j]) / std::max(rates[i], rates[j]));
    }
  }
  return gap;
}

double relative_error(double closed, double quad) {
  const double diff = std::abs(closed - quad);
  if (diff == 0.0) return 0.0;
  return diff / std::max(std::abs(quad), std::numeric_limits<double>::min());
}

}  // namespace

SystemConfig random_valid_config(RandomStream& s, std::size_t index) {
  SystemConfig c;
  c.rho_db = 60.0 * s.uniform();
  for (double& a : c.a) a = 0.05 + 0.9 * s.uniform();
  c.b[0] = 0.02 + 0.46 * s.uniform();
  c.b[1] = 1.0 - c.b[0];
  c.b[2] = 0.02 + 0.46 * s.uniform();
  c.b[3] = 1.0 - c.b[2];
  for (double& om : c.omega) om = std::pow(10.0, -3.0 * s.uniform());
  c.omega_i_db = -30.0 * s.uniform();
  c.varpi1 = 0.2 * s.uniform();
  c.varpi2 = 0.2 * s.uniform();
  for (double& r : c.rates) r = 0.005 + 0.195 * s.uniform();
  c.sic_mode = SicMode::imperfect;

  if (index % 8 == 7) {
    // lambda1 = lambda2 for the first group: a_2 Omega_2 = varpi1 a_3 Omega_3.
    c.varpi1 = std::min(1.0, c.a[1] * c.omega[1] / (c.a[2] * c.omega[2]));
  } else if (index % 8 == 3) {
    c.varpi1 = 0.0;
  }
  return c;
}

double min_relative_rate_gap(const SystemConfig& config, const PairRoles& roles) {
  const DerivedConstants c = build_derived_constants(config, roles);
  return std::min(relative_gap(c.relay_rates), relative_gap(c.cross_rates));
}

AgreementReport run_oracle_agreement(std::size_t configs, std::uint64_t seed, double tol_distinct,
                                     double tol_near_degenerate) {
  AgreementReport report;
  report.configs = configs;
  for (std::size_t i = 0; i < configs; ++i) {
    RandomStream stream(seed, i);
    const SystemConfig base = random_valid_config(stream, i);
    for (SicMode mode : {SicMode::imperfect, SicMode::perfect}) {
      SystemConfig config = base;
      config.sic_mode = mode;
      for (Signal signal : {Signal::x1, Signal::x2, Signal::x3, Signal::x4}) {
        AgreementCase k;
        k.config_index = i;
        k.config = config;
        k.signal = signal;
        k.closed = outage_probability(config, signal);
        k.quad = quad_outage_probability(config, signal);
        k.rel_error = relative_error(k.closed, k.quad);
        k.near_degenerate = min_relative_rate_gap(config, roles_for(signal)) < kNearDegenerateGap;

        ++report.comparisons;
        double& worst_in_class = k.near_degenerate ? report.max_rel_near_degenerate : report.max_rel_distinct;
        worst_in_class = std::max(worst_in_class, k.rel_error);
        if (k.near_degenerate) ++report.near_degenerate;
        if (!report.worst || k.rel_error > report.worst->rel_error) report.worst = k;
        if (k.rel_error > (k.near_degenerate ? tol_near_degenerate : tol_distinct)) {
          report.failures.push_back(k);
        }
      }
    }
  }
  return report;
}

}  // namespace twrnoma
