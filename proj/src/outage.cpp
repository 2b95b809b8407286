// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/outage.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"
#include "twrnoma/hypoexp.hpp"

namespace twrnoma {

std::string_view to_string(OutageMethod m) noexcept {
  return m == OutageMethod::closed ? "closed" : "asymptotic";
}

double checked_probability(double raw) {
  constexpr double kDust = 1e-12;
  if (std::isnan(raw) || raw < -kDust || raw > 1.0 + kDust) {
    throw NumericError(fmt::format("outage probability {} outside [0,1]", raw));
  }
  return std::clamp(raw, 0.0, 1.0);
}

namespace detail {

double relay_interference_transform(const DerivedConstants& c, double omega_l) {
  const auto& lam = c.relay_rates;
  const double beta = c.beta_l;
  if (lam.size() == 1) return lam[0] * omega_l / (omega_l * lam[0] + beta);
  if (c.phi) {
    const auto& phi = *c.phi;
    return lam[0] * lam[1] * lam[2] *
           (phi[0] * omega_l / (omega_l * lam[0] + beta) -
            phi[1] * omega_l / (omega_l * lam[1] + beta) +
            phi[2] * omega_l / (omega_l * lam[2] + beta));
  }
  return hypoexp_laplace(HypoexpSpec(lam), beta / omega_l);
}

double cross_interference_transform(const DerivedConstants& c, double omega_l) {
  if (c.cross_rates.empty()) return 1.0;
  const double x = c.beta_l + c.beta_t * omega_l * c.varphi_t;
  const double l1 = c.cross_rates[0], l2 = c.cross_rates[1];
  if (c.cross_distinct) {
    return l1 * l2 / (l2 - l1) *
           (omega_l / (x + omega_l * l1) - omega_l / (x + omega_l * l2));
  }
  return hypoexp_laplace(HypoexpSpec(c.cross_rates), x / omega_l);
}

}  // namespace detail

namespace {

OutageValue make_value(double p, OutageMethod method, const DerivedConstants& c, SignalRole role) {
  return {checked_probability(p), method, c.sic_mode, role, c.roles};
}

}  // namespace

OutageValue outage_xl(const SystemConfig& config, const PairRoles& roles) {
  const DerivedConstants c = build_derived_constants(config, roles);
  if (!c.theta_l) return make_value(1.0, OutageMethod::closed, c, SignalRole::strong);

  const double om_l = config.omega[roles.l - 1];
  const double om_k = config.omega[roles.k - 1];
  const double theta = *c.theta_l;
  const double tau = *c.tau_l;

  const double j1 = std::exp(-c.beta_l / om_l) * detail::relay_interference_transform(c, om_l);

  double j2 = std::exp(-theta / om_k);
  const double q = c.epsilon * tau * c.rho * c.omega_i;
  if (q > 0.0) {
    // exponent -theta (Omega_k + q) / (q Omega_k) + 1/(eps rho Omega_I), regrouped
    // as -theta/Omega_k - (theta - tau)/q so that no two large terms cancel.
    j2 -= q / (om_k + q) * std::exp(-theta / om_k - (theta - tau) / q);
  }
  return make_value(1.0 - j1 * j2, OutageMethod::closed, c, SignalRole::strong);
}

OutageValue outage_xt(const SystemConfig& config, const PairRoles& roles) {
  const DerivedConstants c = build_derived_constants(config, roles);
  if (!c.xi_t) return make_value(1.0, OutageMethod::closed, c, SignalRole::weak);

  const double om_l = config.omega[roles.l - 1];
  const double om_t = config.omega[roles.t - 1];
  const double om_k = config.omega[roles.k - 1];
  const double om_r = config.omega[roles.r - 1];
  const double xi = *c.xi_t;

  const double theta1 = std::exp(-c.beta_l / om_l - c.beta_t * c.varphi_t) /
                        (c.varphi_t * om_t *
                         (1.0 + c.epsilon * c.beta_t * c.rho * c.varphi_t * c.omega_i)) *
                        detail::cross_interference_transform(c, om_l);
  const double theta23 = std::exp(-xi / om_k - xi / om_r);
  return make_value(1.0 - theta1 * theta23, OutageMethod::closed, c, SignalRole::weak);
}

OutageValue outage_xl_asymptotic(const SystemConfig& config, const PairRoles& roles,
                                 AsymptoticLimit limit) {
  const DerivedConstants c = build_derived_constants(config, roles);
  if (!c.theta_l) return make_value(1.0, OutageMethod::asymptotic, c, SignalRole::strong);

  const double om_l = config.omega[roles.l - 1];
  const double om_k = config.omega[roles.k - 1];
  const double transform = detail::relay_interference_transform(c, om_l);

  if (config.sic_mode == SicMode::perfect) {
    return make_value(1.0 - transform, OutageMethod::asymptotic, c, SignalRole::strong);
  }

  const double theta = *c.theta_l;
  const double tau = *c.tau_l;
  const double q = c.epsilon * tau * c.rho * c.omega_i;
  double bracket = 1.0;
  if (q > 0.0) {
    const double share = q / (om_k + q);
    if (limit == AsymptoticLimit::at_rho) {
      bracket = 1.0 - theta / om_k - share * (1.0 - theta * (om_k + q) / (q * om_k));
    } else {
      // theta/Omega_k and the matching product term vanish as rho grows; q does not.
      bracket = 1.0 - share;
    }
  }
  return make_value(1.0 - transform * bracket, OutageMethod::asymptotic, c, SignalRole::strong);
}

OutageValue outage_xt_asymptotic(const SystemConfig& config, const PairRoles& roles,
                                 AsymptoticLimit /*limit*/) {
  // Every factor of the x_t high-SNR expression is invariant in rho (lambda', beta
  // scale as 1/rho; rho beta_t and varphi_t are constant), so both limits coincide.
  const DerivedConstants c = build_derived_constants(config, roles);
  if (!c.xi_t) return make_value(1.0, OutageMethod::asymptotic, c, SignalRole::weak);

  const double om_l = config.omega[roles.l - 1];
  const double om_t = config.omega[roles.t - 1];
  const double denom =
      c.varphi_t * om_t * (1.0 + c.epsilon * c.rho * c.beta_t * c.varphi_t * c.omega_i);
  const double p = 1.0 - detail::cross_interference_transform(c, om_l) / denom;
  return make_value(p, OutageMethod::asymptotic, c, SignalRole::weak);
}

double outage_probability(const SystemConfig& config, Signal signal, OutageMethod method) {
  const PairRoles roles = roles_for(signal);
  const bool strong = role_of(signal) == SignalRole::strong;
  if (method == OutageMethod::closed) {
    return (strong ? outage_xl(config, roles) : outage_xt(config, roles)).probability;
  }
  return (strong ? outage_xl_asymptotic(config, roles) : outage_xt_asymptotic(config, roles))
      .probability;
}

}  // namespace twrnoma
