// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/derived_constants.hpp"

#include <algorithm>
#include <cmath>

namespace twrnoma {

bool rates_degenerate(double x, double y) noexcept {
  return std::abs(x - y) <= kDegenerateRateTolerance * std::max(x, y);
}

bool rates_pairwise_distinct(const std::vector<double>& rates) noexcept {
  for (std::size_t i = 0; i < rates.size(); ++i) {
    for (std::size_t j = i + 1; j < rates.size(); ++j) {
      if (rates_degenerate(rates[i], rates[j])) return false;
    }
  }
  return true;
}

double target_sinr(double rate_bpcu) noexcept { return std::exp2(2.0 * rate_bpcu) - 1.0; }

DerivedConstants build_derived_constants(const SystemConfig& config, const PairRoles& roles) {
  config.validate();
  roles.validate();

  DerivedConstants c;
  c.roles = roles;
  c.sic_mode = config.sic_mode;
  c.epsilon = sic_epsilon(config.sic_mode);
  c.rho = config.rho();
  c.omega_i = config.omega_i();
  for (int i = 0; i < 4; ++i) c.gamma_th[i] = target_sinr(config.rates[i]);

  const int l = roles.l - 1, t = roles.t - 1, k = roles.k - 1, r = roles.r - 1;
  const double rho = c.rho;
  const auto& a = config.a;
  const auto& b = config.b;
  const auto& om = config.omega;
  const double w1 = config.varpi1;
  const double w2 = config.varpi2;
  const double g_l = c.gamma_th[l];
  const double g_t = c.gamma_th[t];

  c.relay_rates.push_back(1.0 / (rho * a[t] * om[t]));
  if (w1 > 0.0) {
    const double lam2 = 1.0 / (rho * w1 * a[k] * om[k]);
    const double lam3 = 1.0 / (rho * w1 * a[r] * om[r]);
    c.relay_rates.push_back(lam2);
    c.relay_rates.push_back(lam3);
    c.cross_rates = {lam2, lam3};
    c.cross_distinct = !rates_degenerate(lam2, lam3);
    if (rates_pairwise_distinct(c.relay_rates)) {
      const double l1 = c.relay_rates[0];
      c.phi = std::array<double, 3>{
          1.0 / ((lam2 - l1) * (lam3 - l1)),
          1.0 / ((lam3 - lam2) * (lam2 - l1)),
          1.0 / ((lam3 - l1) * (lam3 - lam2)),
      };
    }
  }

  c.beta_l = g_l / (rho * a[l]);
  c.beta_t = g_t / (rho * a[t]);
  c.varphi_t = (om[l] + rho * c.beta_l * a[t] * om[t]) / (om[l] * om[t]);

  c.feasible_l = b[l] > w2 * g_l;
  c.feasible_t = b[t] > (b[l] + w2) * g_t;
  if (c.feasible_l) c.tau_l = g_l / (rho * (b[l] - w2 * g_l));
  if (c.feasible_t) c.xi_t = g_t / (rho * (b[t] - b[l] * g_t - w2 * g_t));
  if (c.tau_l && c.xi_t) c.theta_l = std::max(*c.tau_l, *c.xi_t);
  return c;
}

}  // namespace twrnoma
