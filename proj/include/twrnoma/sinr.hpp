// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "twrnoma/channel.hpp"
#include "twrnoma/config.hpp"

namespace twrnoma {

/// The five instantaneous SINRs of one role assignment.
struct SinrSet {
  double relay_strong = 0.0;  ///< relay decodes x_l, x_t still superposed
  double relay_weak = 0.0;    ///< relay decodes x_t after cancelling x_l
  double user_cross = 0.0;    ///< D_k decodes x_t (first SIC stage)
  double user_own = 0.0;      ///< D_k decodes x_l after cancelling x_t
  double far_user = 0.0;      ///< D_r decodes x_t directly
};

/// Precomputes the linear constants of a configuration for repeated evaluation.
/// All denominators carry the +1 noise term, so they are >= 1.
class SinrEvaluator {
 public:
  SinrEvaluator(const SystemConfig& config, const PairRoles& roles);

  SinrSet operator()(const ChannelSample& s) const noexcept;

 private:
  double rho_;
  double eps_;
  double varpi1_, varpi2_;
  double a_l_, a_t_, a_k_, a_r_;
  double b_l_, b_t_;
  int l_, t_, k_, r_;
};

SinrSet compute_sinrs(const SystemConfig& config, const PairRoles& roles,
                      const ChannelSample& sample);

}  // namespace twrnoma
