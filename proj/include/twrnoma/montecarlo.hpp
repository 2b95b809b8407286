// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "twrnoma/config.hpp"

namespace twrnoma {

/// How channel gains relate across the two slots of one exchange.
enum class SlotFading {
  /// Independent realizations for the multiple-access and broadcast slots.
  /// The outage of this model is the product of per-slot success probabilities,
  /// which is how the exact expressions are defined.
  independent,
  /// One realization shared by both slots. |h_k|^2 and |h_r|^2 then couple the
  /// relay and user events, so estimates drift from the product form when varpi1 > 0.
  shared,
};

struct McOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). Results do not
  /// depend on this value.
  unsigned threads = 0;
  SlotFading fading = SlotFading::independent;
};

/// Trials are split into chunks of this size; chunk c draws from stream c.
inline constexpr std::uint64_t kTrialsPerChunk = 1u << 16;

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `events` successes in `trials`; z = 1.959964 is 95%.
WilsonInterval wilson_interval(std::uint64_t events, std::uint64_t trials, double z = 1.959963984540054);

struct OutageEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t trials = 0;
  std::uint64_t events = 0;
  std::uint64_t seed = 0;
  SignalRole signal = SignalRole::strong;
  SicMode mode = SicMode::imperfect;
  PairRoles roles;
};

struct OutagePairEstimate {
  OutageEstimate strong;
  OutageEstimate weak;
};

/// Outage of x_l and x_t from one pass over the same draws. Each trial evaluates
/// the complementary events directly from instantaneous SINRs:
///   x_l succeeds iff relay_strong > g_l, user_cross > g_t and user_own > g_l;
///   x_t succeeds iff relay_weak > g_t, relay_strong > g_l, user_cross > g_t and far_user > g_t.
/// Requires trials >= 1000 (ConfigError).
OutagePairEstimate mc_outage(const SystemConfig& config, const PairRoles& roles, const McOptions& opts);

OutageEstimate mc_outage_xl(const SystemConfig& config, const PairRoles& roles,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);
OutageEstimate mc_outage_xt(const SystemConfig& config, const PairRoles& roles,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

/// Mean achievable rates in BPCU, 1/2 log2(1 + SINR) per slot with the end-to-end
/// SINR of decode-and-forward taken as the minimum over the hops:
///   x_l: min(relay_strong, user_own), x_t: min(relay_weak, far_user).
/// The 1/2 accounts for the two-slot exchange.
struct ErgodicRates {
  double strong = 0.0;
  double weak = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

ErgodicRates mc_ergodic_rates(const SystemConfig& config, const PairRoles& roles, const McOptions& opts);

}  // namespace twrnoma
