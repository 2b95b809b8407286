// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "twrnoma/config.hpp"
#include "twrnoma/quadrature.hpp"

namespace twrnoma {

/// Quadrature evaluation of the outage integrals, independent of the closed
/// forms in outage.hpp: only the model constants and hypoexp_pdf are shared.
/// Failure probabilities are integrated directly (never as 1 - success), so
/// small outages keep their relative accuracy.

struct StrongOracleTerms {
  double relay_success = 0.0;  ///< J1 = Pr(|h_l|^2 > (Z + 1) beta_l)
  double relay_failure = 1.0;  ///< 1 - J1, by quadrature of f_Z (1 - exp(-(z+1) beta_l / Omega_l))
  double user_success = 0.0;   ///< J2
  double user_failure = 1.0;   ///< 1 - J2, by quadrature over |h_k|^2
  double outage = 1.0;
};

struct WeakOracleTerms {
  double relay_success = 0.0;  ///< Theta1: prefactor times the integral of f_Z' exp(-s z')
  double relay_failure = 1.0;
  double user_k_success = 0.0;  ///< Theta2
  double user_r_success = 0.0;  ///< Theta3
  double outage = 1.0;
};

StrongOracleTerms quad_outage_xl_terms(const SystemConfig& config, const PairRoles& roles,
                                       const QuadSpec& spec = {});
WeakOracleTerms quad_outage_xt_terms(const SystemConfig& config, const PairRoles& roles,
                                     const QuadSpec& spec = {});

double quad_outage_xl(const SystemConfig& config, const PairRoles& roles, const QuadSpec& spec = {});
double quad_outage_xt(const SystemConfig& config, const PairRoles& roles, const QuadSpec& spec = {});

double quad_outage_probability(const SystemConfig& config, Signal signal, const QuadSpec& spec = {});

}  // namespace twrnoma
