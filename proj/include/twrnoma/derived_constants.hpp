// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twrnoma/config.hpp"

namespace twrnoma {

/// Relative gap at or below which two exponential rates are treated as equal:
/// |x - y| <= kDegenerateRateTolerance * max(x, y).
inline constexpr double kDegenerateRateTolerance = 1e-9;

bool rates_degenerate(double x, double y) noexcept;

/// True when every pair in `rates` is separated beyond the degeneracy tolerance.
bool rates_pairwise_distinct(const std::vector<double>& rates) noexcept;

/// Scalars shared by the exact and asymptotic outage expressions of one
/// role assignment. Everything is linear; rho and Omega_I were converted
/// from dB exactly once, inside SystemConfig.
struct DerivedConstants {
  PairRoles roles;
  SicMode sic_mode = SicMode::imperfect;
  double epsilon = 1.0;
  double rho = 1.0;
  double omega_i = 0.0;

  /// Target SINRs 2^(2R_i) - 1, indexed by user - 1.
  std::array<double, 4> gamma_th{};

  /// Rates of the relay interference Z = rho a_t |h_t|^2 + rho varpi1 (a_k |h_k|^2 + a_r |h_r|^2).
  /// Only the active terms are present: {lambda1} when varpi1 = 0, else {lambda1, lambda2, lambda3}.
  std::vector<double> relay_rates;
  /// Partial-fraction weights Phi1..Phi3, present only for three pairwise-distinct rates.
  std::optional<std::array<double, 3>> phi;

  /// Rates of Z' = rho varpi1 (a_k |h_k|^2 + a_r |h_r|^2): {lambda'1, lambda'2} when varpi1 > 0, else empty.
  std::vector<double> cross_rates;
  bool cross_distinct = false;

  double beta_l = 0.0;
  double beta_t = 0.0;
  double varphi_t = 0.0;

  /// b_l > varpi2 gamma_th_l
  bool feasible_l = false;
  /// b_t > (b_l + varpi2) gamma_th_t
  bool feasible_t = false;
  /// Present only when the corresponding condition holds.
  std::optional<double> tau_l;
  std::optional<double> xi_t;
  /// max(tau_l, xi_t), present only when both are.
  std::optional<double> theta_l;

  double gamma_l() const noexcept { return gamma_th[roles.l - 1]; }
  double gamma_t() const noexcept { return gamma_th[roles.t - 1]; }
};

/// Validates `config` and `roles` (ConfigError) and evaluates every constant.
DerivedConstants build_derived_constants(const SystemConfig& config, const PairRoles& roles);

/// 2^(2R) - 1
double target_sinr(double rate_bpcu) noexcept;

}  // namespace twrnoma
