// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/sinr.hpp"

namespace twrnoma {

SinrEvaluator::SinrEvaluator(const SystemConfig& config, const PairRoles& roles)
    : rho_(config.rho()),
      eps_(sic_epsilon(config.sic_mode)),
      varpi1_(config.varpi1),
      varpi2_(config.varpi2),
      a_l_(config.a[roles.l - 1]),
      a_t_(config.a[roles.t - 1]),
      a_k_(config.a[roles.k - 1]),
      a_r_(config.a[roles.r - 1]),
      b_l_(config.b[roles.l - 1]),
      b_t_(config.b[roles.t - 1]),
      l_(roles.l),
      t_(roles.t),
      k_(roles.k),
      r_(roles.r) {
  roles.validate();
}

SinrSet SinrEvaluator::operator()(const ChannelSample& s) const noexcept {
  const double hl = s.h(l_), ht = s.h(t_), hk = s.h(k_), hr = s.h(r_);
  const double residual = eps_ * rho_ * s.residual;
  const double cross_is = rho_ * varpi1_ * (hk * a_k_ + hr * a_r_);

  SinrSet out;
  out.relay_strong = rho_ * hl * a_l_ / (rho_ * ht * a_t_ + cross_is + 1.0);
  out.relay_weak = rho_ * ht * a_t_ / (residual + cross_is + 1.0);
  out.user_cross = rho_ * hk * b_t_ / (rho_ * hk * b_l_ + rho_ * varpi2_ * hk + 1.0);
  out.user_own = rho_ * hk * b_l_ / (residual + rho_ * varpi2_ * hk + 1.0);
  out.far_user = rho_ * hr * b_t_ / (rho_ * hr * b_l_ + rho_ * varpi2_ * hr + 1.0);
  return out;
}

SinrSet compute_sinrs(const SystemConfig& config, const PairRoles& roles,
                      const ChannelSample& sample) {
  return SinrEvaluator(config, roles)(sample);
}

}  // namespace twrnoma
