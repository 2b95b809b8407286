// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/config.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"

namespace twrnoma {

std::string_view to_string(SicMode mode) noexcept {
  return mode == SicMode::imperfect ? "ipSIC" : "pSIC";
}

SicMode parse_sic_mode(std::string_view text) {
  if (text == "ip" || text == "ipSIC" || text == "imperfect" || text == "1") {
    return SicMode::imperfect;
  }
  if (text == "p" || text == "pSIC" || text == "perfect" || text == "0") {
    return SicMode::perfect;
  }
  throw ConfigError(fmt::format("sic_mode must be ip|p (epsilon 1|0), got '{}'", text));
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

std::array<double, 4> omegas_from_distances(double d1, double d2, double alpha) {
  if (!(d1 > 0.0) || !(d2 > 0.0) || !std::isfinite(d1) || !std::isfinite(d2)) {
    throw ConfigError("distances d1, d2 must be positive");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw ConfigError("path-loss exponent alpha must be finite and non-negative");
  }
  const double near = std::pow(d1, -alpha);
  const double far = std::pow(d2, -alpha);
  return {near, far, near, far};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool open_unit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

void SystemConfig::validate() const {
  require(std::isfinite(rho_db), "rho_db must be finite");
  require(std::isfinite(omega_i_db), "omega_i_db must be finite");
  for (int i = 0; i < 4; ++i) {
    require(open_unit(a[i]), fmt::format("a{} must lie in (0,1), got {}", i + 1, a[i]));
    require(open_unit(b[i]), fmt::format("b{} must lie in (0,1), got {}", i + 1, b[i]));
    require(omega[i] > 0.0 && std::isfinite(omega[i]),
            fmt::format("omega{} must be positive, got {}", i + 1, omega[i]));
    require(rates[i] >= 0.0 && std::isfinite(rates[i]),
            fmt::format("r{} must be a non-negative rate, got {}", i + 1, rates[i]));
  }
  constexpr double sum_tol = 1e-12;
  require(std::abs(b[0] + b[1] - 1.0) <= sum_tol, "b1 + b2 must equal 1");
  require(std::abs(b[2] + b[3] - 1.0) <= sum_tol, "b3 + b4 must equal 1");
  require(b[1] > b[0], "b2 must exceed b1");
  require(b[3] > b[2], "b4 must exceed b3");
  require(varpi1 >= 0.0 && varpi1 <= 1.0, "varpi1 must lie in [0,1]");
  require(varpi2 >= 0.0 && varpi2 <= 1.0, "varpi2 must lie in [0,1]");
  if (sic_mode == SicMode::imperfect) {
    require(omega_i() > 0.0, "omega_i must be positive under ipSIC");
  }
}

void PairRoles::validate() const {
  const bool lk = (l == 1 && k == 3) || (l == 3 && k == 1);
  const bool tr = (t == 2 && r == 4) || (t == 4 && r == 2);
  // l and t share a group: {1,2} or {3,4}.
  const bool grouped = (l == 1 && t == 2) || (l == 3 && t == 4);
  if (!lk || !tr || !grouped) {
    throw ConfigError(fmt::format("invalid role tuple (l,t,k,r)=({},{},{},{})", l, t, k, r));
  }
}

PairRoles roles_for(Signal s) noexcept {
  return (s == Signal::x1 || s == Signal::x2) ? PairRoles::group_one() : PairRoles::group_two();
}

SignalRole role_of(Signal s) noexcept {
  return (s == Signal::x1 || s == Signal::x3) ? SignalRole::strong : SignalRole::weak;
}

std::string_view to_string(Signal s) noexcept {
  switch (s) {
    case Signal::x1: return "x1";
    case Signal::x2: return "x2";
    case Signal::x3: return "x3";
    case Signal::x4: return "x4";
  }
  return "?";
}

Signal parse_signal(std::string_view text) {
  if (text == "x1") return Signal::x1;
  if (text == "x2") return Signal::x2;
  if (text == "x3") return Signal::x3;
  if (text == "x4") return Signal::x4;
  throw ConfigError(fmt::format("unknown signal '{}' (expected x1..x4)", text));
}

}  // namespace twrnoma
