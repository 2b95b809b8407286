// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twrnoma/config.hpp"
#include "twrnoma/random_stream.hpp"

namespace twrnoma {

/// Random valid scenario: rho_db ~ U[0,60], power splits with b_weak > b_strong,
/// Omega log-uniform in [1e-3, 1], varpi in [0, 0.2], Omega_I in [-30, 0] dB,
/// rates in [0.005, 0.2]. Every eighth draw (`index % 8 == 7`) pins varpi1 so
/// the first two relay-interference rates coincide, exercising the
/// repeated-rate path; every fourth of the remaining draws sets varpi1 = 0.
SystemConfig random_valid_config(RandomStream& stream, std::size_t index);

/// Minimum relative gap between any two interference rates (relay or cross)
/// of this role assignment; +inf when fewer than two rates are active.
double min_relative_rate_gap(const SystemConfig& config, const PairRoles& roles);

struct AgreementCase {
  std::size_t config_index = 0;
  SystemConfig config;
  Signal signal = Signal::x1;
  double closed = 0.0;
  double quad = 0.0;
  double rel_error = 0.0;
  bool near_degenerate = false;
};

struct AgreementReport {
  std::size_t configs = 0;
  std::size_t comparisons = 0;
  std::size_t near_degenerate = 0;
  double max_rel_distinct = 0.0;
  double max_rel_near_degenerate = 0.0;
  std::vector<AgreementCase> failures;
  std::optional<AgreementCase> worst;
};

/// Relative gap below which a case is graded against the looser tolerance.
inline constexpr double kNearDegenerateGap = 1e-3;

/// Compares closed-form and quadrature outage for x1..x4 under both SIC modes
/// over `configs` random scenarios; |closed - quad| / quad must not exceed
/// `tol_distinct` (or `tol_near_degenerate` when the rate gap is below
/// kNearDegenerateGap).
AgreementReport run_oracle_agreement(std::size_t configs, std::uint64_t seed,
                                     double tol_distinct = 1e-6, double tol_near_degenerate = 1e-5);

}  // namespace twrnoma
