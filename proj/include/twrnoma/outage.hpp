// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "twrnoma/config.hpp"
#include "twrnoma/derived_constants.hpp"

namespace twrnoma {

enum class OutageMethod { closed, asymptotic };

std::string_view to_string(OutageMethod m) noexcept;

struct OutageValue {
  double probability = 1.0;
  OutageMethod method = OutageMethod::closed;
  SicMode mode = SicMode::imperfect;
  SignalRole signal = SignalRole::strong;
  PairRoles roles;
};

/// Raw values within [-1e-12, 1 + 1e-12] are clamped to [0,1]; NaN or larger
/// excursions throw NumericError.
double checked_probability(double raw);

/// Exact outage of the strong signal x_l: 1 - J1 J2. Dispatches on the SIC mode
/// and on the active interference terms; returns exactly 1 when the user-side
/// thresholds are infeasible.
OutageValue outage_xl(const SystemConfig& config, const PairRoles& roles);

/// Exact outage of the weak signal x_t: 1 - Theta1 Theta2 Theta3. Exactly 1
/// when b_t <= (b_l + varpi2) gamma_th_t.
OutageValue outage_xt(const SystemConfig& config, const PairRoles& roles);

enum class AsymptoticLimit {
  at_rho,       ///< the high-SNR expressions evaluated at the configured rho
  at_infinity,  ///< the same expressions with every term vanishing in rho dropped
};

OutageValue outage_xl_asymptotic(const SystemConfig& config, const PairRoles& roles,
                                 AsymptoticLimit limit = AsymptoticLimit::at_rho);
OutageValue outage_xt_asymptotic(const SystemConfig& config, const PairRoles& roles,
                                 AsymptoticLimit limit = AsymptoticLimit::at_rho);

/// Convenience dispatch on a user signal x1..x4.
double outage_probability(const SystemConfig& config, Signal signal,
                          OutageMethod method = OutageMethod::closed);

namespace detail {

/// E[exp(-(beta_l/Omega_l) Z)]: the bracketed partial-fraction sum of J1
/// (single term, Phi form, or the general evaluator for degenerate rates).
double relay_interference_transform(const DerivedConstants& c, double omega_l);

/// E[exp(-s Z')] with s = (beta_l + beta_t Omega_l varphi_t) / Omega_l, the
/// two-term bracket of Theta1; 1 when varpi1 = 0.
double cross_interference_transform(const DerivedConstants& c, double omega_l);

}  // namespace detail
}  // namespace twrnoma
