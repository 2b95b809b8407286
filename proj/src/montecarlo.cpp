// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "twrnoma/channel.hpp"
#include "twrnoma/derived_constants.hpp"
#include "twrnoma/errors.hpp"
#include "twrnoma/random_stream.hpp"
#include "twrnoma/sinr.hpp"

namespace twrnoma {

WilsonInterval wilson_interval(std::uint64_t events, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(events) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // The exact endpoints at p = 0 and p = 1 are 0 and 1; avoid rounding past them.
  WilsonInterval ci{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  if (events == 0) ci.low = 0.0;
  if (events == trials) ci.high = 1.0;
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

namespace {

void require_trials(std::uint64_t trials) {
  if (trials < 1000) {
    throw ConfigError(fmt::format("Monte Carlo needs at least 1000 trials, got {}", trials));
  }
}

/// Runs `chunk_fn(chunk_index, count)` for every chunk on a pool of
/// threads. Chunk results must be stored per index by the caller.
template <typename ChunkFn>
void for_each_chunk(std::uint64_t trials, unsigned threads, ChunkFn&& chunk_fn) {
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = c * kTrialsPerChunk;
      chunk_fn(c, std::min(kTrialsPerChunk, trials - first));
    }
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
}

struct Counts {
  std::uint64_t strong_fail = 0;
  std::uint64_t weak_fail = 0;
};

OutageEstimate make_estimate(std::uint64_t events, const SystemConfig& config,
                             const PairRoles& roles, const McOptions& opts, SignalRole role) {
  OutageEstimate e;
  e.trials = opts.trials;
  e.events = events;
  e.p_hat = static_cast<double>(events) / static_cast<double>(opts.trials);
  const auto ci = wilson_interval(events, opts.trials);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  e.seed = opts.seed;
  e.signal = role;
  e.mode = config.sic_mode;
  e.roles = roles;
  return e;
}

}  // namespace

OutagePairEstimate mc_outage(const SystemConfig& config, const PairRoles& roles,
                             const McOptions& opts) {
  config.validate();
  roles.validate();
  require_trials(opts.trials);

  const ChannelSampler sampler(config);
  const SinrEvaluator sinr(config, roles);
  const double g_l = target_sinr(config.rates[roles.l - 1]);
  const double g_t = target_sinr(config.rates[roles.t - 1]);
  const bool independent = opts.fading == SlotFading::independent;

  const std::uint64_t chunks = (opts.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<Counts> per_chunk(chunks);

  for_each_chunk(opts.trials, opts.threads, [&](std::uint64_t chunk, std::uint64_t count) {
    RandomStream stream(opts.seed, chunk);
    Counts counts;
    for (std::uint64_t i = 0; i < count; ++i) {
      const ChannelSample uplink = sampler(stream);
      const ChannelSample downlink = sampler(stream);
      const SinrSet relay = sinr(uplink);
      const SinrSet users = independent ? sinr(downlink) : relay;

      const bool relay_l = relay.relay_strong > g_l;
      const bool relay_t = relay.relay_weak > g_t;
      const bool cross_t = users.user_cross > g_t;
      const bool strong_ok = relay_l && cross_t && users.user_own > g_l;
      const bool weak_ok = relay_t && relay_l && cross_t && users.far_user > g_t;
      counts.strong_fail += strong_ok ? 0 : 1;
      counts.weak_fail += weak_ok ? 0 : 1;
    }
    per_chunk[chunk] = counts;
  });

  Counts total;
  for (const auto& c : per_chunk) {
    total.strong_fail += c.strong_fail;
    total.weak_fail += c.weak_fail;
  }
  return {make_estimate(total.strong_fail, config, roles, opts, SignalRole::strong),
          make_estimate(total.weak_fail, config, roles, opts, SignalRole::weak)};
}

OutageEstimate mc_outage_xl(const SystemConfig& config, const PairRoles& roles,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  return mc_outage(config, roles, {trials, seed, threads, SlotFading::independent}).strong;
}

OutageEstimate mc_outage_xt(const SystemConfig& config, const PairRoles& roles,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  return mc_outage(config, roles, {trials, seed, threads, SlotFading::independent}).weak;
}

ErgodicRates mc_ergodic_rates(const SystemConfig& config, const PairRoles& roles,
                              const McOptions& opts) {
  config.validate();
  roles.validate();
  require_trials(opts.trials);

  const ChannelSampler sampler(config);
  const SinrEvaluator sinr(config, roles);
  const bool independent = opts.fading == SlotFading::independent;

  const std::uint64_t chunks = (opts.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<std::pair<double, double>> per_chunk(chunks);

  for_each_chunk(opts.trials, opts.threads, [&](std::uint64_t chunk, std::uint64_t count) {
    RandomStream stream(opts.seed, chunk);
    double strong = 0.0, weak = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const ChannelSample uplink = sampler(stream);
      const ChannelSample downlink = sampler(stream);
      const SinrSet relay = sinr(uplink);
      const SinrSet users = independent ? sinr(downlink) : relay;
      strong += 0.5 * std::log2(1.0 + std::min(relay.relay_strong, users.user_own));
      weak += 0.5 * std::log2(1.0 + std::min(relay.relay_weak, users.far_user));
    }
    per_chunk[chunk] = {strong, weak};
  });

  // Merge in chunk order so the floating-point sum is independent of scheduling.
  double strong = 0.0, weak = 0.0;
  for (const auto& [s, w] : per_chunk) {
    strong += s;
    weak += w;
  }
  const double n = static_cast<double>(opts.trials);
  return {strong / n, weak / n, opts.trials, opts.seed};
}

}  // namespace twrnoma
