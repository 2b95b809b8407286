// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace twrnoma {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., Random123).
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Counter-based random stream. Draw number n of stream s under seed S is a
/// pure function of (S, s, n): the seed is the Philox key, the stream index
/// occupies the high counter words and the block index the low words. Sub-streams
/// with different indices never overlap, so parallel chunks need no coordination.
/// A RandomStream object itself is single-owner.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on (0, 1] with 53-bit resolution.
  double uniform() noexcept;

  /// Exponential variate with the given mean.
  double exponential(double mean) noexcept;

  /// Number of 64-bit draws consumed so far.
  std::uint64_t position() const noexcept { return position_; }

 private:
  void refill() noexcept;

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  std::uint64_t position_ = 0;
};

}  // namespace twrnoma
