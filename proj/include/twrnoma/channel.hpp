// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "twrnoma/config.hpp"
#include "twrnoma/random_stream.hpp"

namespace twrnoma {

/// One Rayleigh fading realization: power gains |h_1|^2..|h_4|^2 and the
/// residual-SIC gain |g|^2 (zero under perfect SIC).
struct ChannelSample {
  std::array<double, 4> gain{};
  double residual = 0.0;

  double h(int user) const noexcept { return gain[user - 1]; }
};

/// Precomputed means for repeated sampling from one configuration.
class ChannelSampler {
 public:
  explicit ChannelSampler(const SystemConfig& config);

  /// Always consumes five draws so that ipSIC and pSIC runs with the same seed
  /// see identical |h_i|^2; the residual draw is discarded under pSIC.
  ChannelSample operator()(RandomStream& stream) const noexcept;

 private:
  std::array<double, 4> omega_;
  double omega_i_;
  bool residual_active_;
};

ChannelSample sample_channels(RandomStream& stream, const SystemConfig& config);

}  // namespace twrnoma
