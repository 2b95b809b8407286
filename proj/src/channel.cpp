// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/channel.hpp"

namespace twrnoma {

ChannelSampler::ChannelSampler(const SystemConfig& config)
    : omega_(config.omega),
      omega_i_(config.omega_i()),
      residual_active_(config.sic_mode == SicMode::imperfect) {}

ChannelSample ChannelSampler::operator()(RandomStream& stream) const noexcept {
  ChannelSample s;
  for (int i = 0; i < 4; ++i) s.gain[i] = stream.exponential(omega_[i]);
  const double g = stream.exponential(omega_i_);
  s.residual = residual_active_ ? g : 0.0;
  return s;
}

ChannelSample sample_channels(RandomStream& stream, const SystemConfig& config) {
  return ChannelSampler(config)(stream);
}

}  // namespace twrnoma
