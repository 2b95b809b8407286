// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "twrnoma/config.hpp"

namespace twrnoma {

/// Orthogonal (TDMA) two-way relay reference. The four messages share
/// `phases` orthogonal phases, so each hop must carry R in 1/phases of the
/// frame: target SINR 2^(phases R) - 1, full power, no inter-group interference.
/// Outage = 1 - Pr(rho |h_src|^2 > gamma) Pr(rho |h_dst|^2 > gamma) with
/// src/dst = l/k for the strong signal and t/r for the weak one.
/// This baseline is a modelling choice of this project, not a published definition.
inline constexpr int kDefaultOmaPhases = 4;

double oma_outage(const SystemConfig& config, const PairRoles& roles, SignalRole signal,
                  int phases = kDefaultOmaPhases);
double oma_outage(const SystemConfig& config, Signal signal, int phases = kDefaultOmaPhases);

std::array<double, 4> oma_outages(const SystemConfig& config, int phases = kDefaultOmaPhases);

}  // namespace twrnoma
