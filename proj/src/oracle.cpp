// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "twrnoma/derived_constants.hpp"
#include "twrnoma/errors.hpp"
#include "twrnoma/hypoexp.hpp"

namespace twrnoma {
namespace {

/// E[1 - exp(-c (Z + offset))] for Z with the given rates, by quadrature.
/// Below the mean the range is cut at doubling points starting from the
/// smallest scale among 1/c and the component means, so a sharp component
/// never hides inside one wide panel.
double expected_shortfall(const std::vector<double>& rates, double c, double offset,
                          const QuadSpec& spec) {
  if (c == 0.0) return 0.0;
  const HypoexpSpec z(rates);
  auto integrand = [&](double x) { return hypoexp_pdf(z, x) * -std::expm1(-c * (x + offset)); };

  const double tail_start = z.mean();
  double cut = 1.0 / c;
  for (double r : rates) cut = std::min(cut, 1.0 / r);
  double lo = 0.0;
  double total = 0.0;
  for (; cut < tail_start; cut *= 2.0) {
    total += integrate(integrand, lo, cut, spec).value;
    lo = cut;
  }
  total += integrate(integrand, lo, tail_start, spec).value;
  return total + integrate_to_infinity(integrand, tail_start, z.mean(), spec).value;
}

double finite(double x) {
  if (!std::isfinite(x)) throw NumericError("oracle produced a non-finite value");
  return x;
}

}  // namespace

StrongOracleTerms quad_outage_xl_terms(const SystemConfig& config, const PairRoles& roles,
                                       const QuadSpec& spec) {
  spec.validate();
  const DerivedConstants c = build_derived_constants(config, roles);
  const double om_l = config.omega[roles.l - 1];
  const double om_k = config.omega[roles.k - 1];

  StrongOracleTerms t;
  t.relay_failure = finite(expected_shortfall(c.relay_rates, c.beta_l / om_l, 1.0, spec));
  t.relay_success = 1.0 - t.relay_failure;

  if (!c.theta_l) {
    // D_k can never clear one of its thresholds.
    t.user_success = 0.0;
    t.user_failure = 1.0;
    t.outage = 1.0;
    return t;
  }
  const double theta = *c.theta_l;
  const double tau = *c.tau_l;
  auto density_k = [om_k](double y) { return std::exp(-y / om_k) / om_k; };

  // |h_k|^2 below theta fails outright; above it, x_l is lost when the residual
  // |g|^2 exceeds (|h_k|^2 - tau) / (eps rho tau).
  double failure = integrate(density_k, 0.0, theta, spec).value;
  const double q = c.epsilon * tau * c.rho * c.omega_i;
  if (q > 0.0) {
    auto residual = [&](double y) { return density_k(y) * std::exp(-(y - tau) / q); };
    failure += integrate_to_infinity(residual, theta, 1.0 / (1.0 / om_k + 1.0 / q), spec).value;
  }
  t.user_failure = finite(failure);
  t.user_success = 1.0 - t.user_failure;
  t.outage = t.relay_failure + t.relay_success * t.user_failure;
  return t;
}

WeakOracleTerms quad_outage_xt_terms(const SystemConfig& config, const PairRoles& roles,
                                     const QuadSpec& spec) {
  spec.validate();
  const DerivedConstants c = build_derived_constants(config, roles);
  const double om_l = config.omega[roles.l - 1];
  const double om_t = config.omega[roles.t - 1];
  const double om_k = config.omega[roles.k - 1];
  const double om_r = config.omega[roles.r - 1];
  const double a_t = config.a[roles.t - 1];

  WeakOracleTerms t;
  // Prefactor exp(-A) / ((1 + D)(1 + C)) with 1 + D = varphi_t Omega_t.
  const double big_a = c.beta_l / om_l + c.beta_t * c.varphi_t;
  const double d = c.rho * c.beta_l * a_t * om_t / om_l;
  const double cc = c.epsilon * c.beta_t * c.rho * c.varphi_t * c.omega_i;
  const double prefactor = std::exp(-big_a) / ((1.0 + d) * (1.0 + cc));
  const double prefactor_shortfall = (d + cc + d * cc - std::expm1(-big_a)) / ((1.0 + d) * (1.0 + cc));

  double integral_shortfall = 0.0;
  if (!c.cross_rates.empty()) {
    const double s = (c.beta_l + c.beta_t * om_l * c.varphi_t) / om_l;
    integral_shortfall = expected_shortfall(c.cross_rates, s, 0.0, spec);
  }
  t.relay_failure = finite(prefactor_shortfall + prefactor * integral_shortfall);
  t.relay_success = 1.0 - t.relay_failure;

  if (!c.xi_t) {
    t.user_k_success = t.user_r_success = 0.0;
    t.outage = 1.0;
    return t;
  }
  const double xi = *c.xi_t;
  t.user_k_success = std::exp(-xi / om_k);
  t.user_r_success = std::exp(-xi / om_r);
  const double users_failure = -std::expm1(-xi / om_k - xi / om_r);
  t.outage = t.relay_failure + t.relay_success * users_failure;
  return t;
}

double quad_outage_xl(const SystemConfig& config, const PairRoles& roles, const QuadSpec& spec) {
  return quad_outage_xl_terms(config, roles, spec).outage;
}

double quad_outage_xt(const SystemConfig& config, const PairRoles& roles, const QuadSpec& spec) {
  return quad_outage_xt_terms(config, roles, spec).outage;
}

double quad_outage_probability(const SystemConfig& config, Signal signal, const QuadSpec& spec) {
  const PairRoles roles = roles_for(signal);
  return role_of(signal) == SignalRole::strong ? quad_outage_xl(config, roles, spec)
                                               : quad_outage_xt(config, roles, spec);
}

}  // namespace twrnoma
