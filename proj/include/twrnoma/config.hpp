// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace twrnoma {

/// Successive interference cancellation quality. Imperfect SIC leaves a
/// Rayleigh-faded residual (epsilon = 1); perfect SIC removes it (epsilon = 0).
enum class SicMode { imperfect, perfect };

constexpr double sic_epsilon(SicMode mode) noexcept {
  return mode == SicMode::imperfect ? 1.0 : 0.0;
}

std::string_view to_string(SicMode mode) noexcept;

/// Accepts ip/ipSIC/imperfect/1 and p/pSIC/perfect/0. Anything else is a
/// ConfigError: epsilon is strictly binary.
SicMode parse_sic_mode(std::string_view text);

/// The single dB -> linear conversion point.
double db_to_linear(double db) noexcept;

/// Channel variances Omega_i = d_i^-alpha; users 1,3 at distance d1 and 2,4 at d2.
std::array<double, 4> omegas_from_distances(double d1, double d2, double alpha);

/// Full scenario. Arrays are indexed by user - 1. Defaults reproduce the
/// reference parameter table (d1 = 2 m, d2 = 10 m, alpha = 2).
struct SystemConfig {
  double rho_db = 30.0;
  std::array<double, 4> a{0.8, 0.2, 0.8, 0.2};
  std::array<double, 4> b{0.2, 0.8, 0.2, 0.8};
  std::array<double, 4> omega{0.25, 0.01, 0.25, 0.01};
  double omega_i_db = -20.0;
  double varpi1 = 0.01;
  double varpi2 = 0.01;
  std::array<double, 4> rates{0.1, 0.01, 0.1, 0.01};
  SicMode sic_mode = SicMode::imperfect;

  double rho() const noexcept { return db_to_linear(rho_db); }
  double omega_i() const noexcept { return db_to_linear(omega_i_db); }

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;
};

/// Index mapping that lets one code path serve both user groups:
/// (l,k) in {(1,3),(3,1)}, (t,r) in {(2,4),(4,2)}, with l,t in one group.
struct PairRoles {
  int l = 1;
  int t = 2;
  int k = 3;
  int r = 4;

  static constexpr PairRoles group_one() noexcept { return {1, 2, 3, 4}; }
  static constexpr PairRoles group_two() noexcept { return {3, 4, 1, 2}; }

  void validate() const;

  friend bool operator==(const PairRoles&, const PairRoles&) = default;
};

/// Strong (near-user) or weak (far-user) signal of a group.
enum class SignalRole { strong, weak };

/// One of the four user messages x1..x4.
enum class Signal { x1, x2, x3, x4 };

constexpr int user_of(Signal s) noexcept { return static_cast<int>(s) + 1; }
PairRoles roles_for(Signal s) noexcept;
SignalRole role_of(Signal s) noexcept;
std::string_view to_string(Signal s) noexcept;
Signal parse_signal(std::string_view text);

}  // namespace twrnoma
