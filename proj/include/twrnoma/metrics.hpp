// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>

#include "twrnoma/config.hpp"

namespace twrnoma {

/// Two-point high-SNR slope of log P against log rho (linear rho):
///   d = -(log P(hi) - log P(lo)) / (log rho_hi - log rho_lo).
/// Requires rho_hi_db > rho_lo_db >= 40 dB (ConfigError otherwise) and throws
/// NumericError when P vanishes at either point.
double diversity_order_estimate(const std::function<double(double rho_db)>& outage,
                                double rho_lo_db, double rho_hi_db);

/// Delay-limited throughput sum_i (1 - P_i) R_i in BPCU, outage indexed by user - 1.
/// No pre-log factor is applied.
double throughput_delay_limited(const SystemConfig& config, const std::array<double, 4>& outage);

/// Closed-form outage of x1..x4 at the configuration's rho.
std::array<double, 4> closed_form_outages(const SystemConfig& config);

}  // namespace twrnoma
