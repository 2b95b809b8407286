// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "twrnoma/errors.hpp"
#include "twrnoma/outage.hpp"
#include "twrnoma/random_stream.hpp"
#include "twrnoma/validation.hpp"

using namespace twrnoma;
using doctest::Approx;

namespace {

constexpr std::array kSignals{Signal::x1, Signal::x2, Signal::x3, Signal::x4};
constexpr std::array kModes{SicMode::imperfect, SicMode::perfect};

SystemConfig reference(double rho_db, SicMode mode) {
  SystemConfig c;
  c.rho_db = rho_db;
  c.sic_mode = mode;
  return c;
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("checked probabilities") {
  CHECK(checked_probability(-5e-13) == 0.0);
  CHECK(checked_probability(1.0 + 5e-13) == 1.0);
  CHECK(checked_probability(0.25) == 0.25);
  CHECK_THROWS_AS(checked_probability(-1e-9), NumericError);
  CHECK_THROWS_AS(checked_probability(1.0 + 1e-9), NumericError);
  CHECK_THROWS_AS(checked_probability(NAN), NumericError);
}

TEST_CASE("zero target rates never cause outage") {
  for (SicMode mode : kModes) {
    for (double w : {0.0, 0.01, 0.3}) {
      SystemConfig c = reference(20.0, mode);
      c.rates = {0, 0, 0, 0};
      c.varpi1 = c.varpi2 = w;
      for (Signal s : kSignals) {
        CHECK(outage_probability(c, s, OutageMethod::closed) == Approx(0.0).epsilon(1e-15));
        CHECK(outage_probability(c, s, OutageMethod::asymptotic) == Approx(0.0).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("infeasible power splits give certain outage") {
  for (SicMode mode : kModes) {
    SystemConfig c = reference(40.0, mode);
    c.b = {0.001, 0.999, 0.2, 0.8};
    c.varpi2 = 0.5;
    CHECK(outage_xl(c, PairRoles::group_one()).probability == 1.0);
    CHECK(outage_xl_asymptotic(c, PairRoles::group_one()).probability == 1.0);

    // b_t <= (b_l + varpi2) gamma_t: the weak signal cannot be separated at D_k,
    // which also blocks the strong signal behind it.
    SystemConfig d = reference(40.0, mode);
    d.rates = {0.1, 1.0, 0.1, 0.01};
    d.b = {0.45, 0.55, 0.2, 0.8};
    CHECK(outage_xt(d, PairRoles::group_one()).probability == 1.0);
    CHECK(outage_xt_asymptotic(d, PairRoles::group_one()).probability == 1.0);
    CHECK(outage_xl(d, PairRoles::group_one()).probability == 1.0);
  }
}

TEST_CASE("both user groups agree under symmetric parameters") {
  for (SicMode mode : kModes) {
    const SystemConfig c = reference(25.0, mode);
    CHECK(outage_probability(c, Signal::x1) == outage_probability(c, Signal::x3));
    CHECK(outage_probability(c, Signal::x2) == outage_probability(c, Signal::x4));
  }
}

TEST_CASE("closed form at the reference point matches the event-level integration") {
  // Computed by direct numerical integration over the fading gains of the
  // success events (nested adaptive quadrature, independent of this library).
  struct Golden {
    double rho_db;
    SicMode mode;
    double xl, xt;
  };
  const Golden golden[] = {
      {10.0, SicMode::imperfect, 0.3340112716284017, 0.646565594065476},
      {10.0, SicMode::perfect, 0.314056624799416, 0.6218601097281784},
      {30.0, SicMode::imperfect, 0.0355995812291372, 0.08981797709458816},
      {30.0, SicMode::perfect, 0.0067037922488155655, 0.026195173730205967},
  };
  for (const auto& g : golden) {
    CAPTURE(g.rho_db);
    const SystemConfig c = reference(g.rho_db, g.mode);
    CHECK(rel_gap(outage_xl(c, PairRoles::group_one()).probability, g.xl) < 1e-6);
    CHECK(rel_gap(outage_xt(c, PairRoles::group_one()).probability, g.xt) < 1e-6);
  }
}

TEST_CASE("asymptotic expressions track the exact ones at high SNR") {
  for (SicMode mode : kModes) {
    const SystemConfig c = reference(60.0, mode);
    for (Signal s : kSignals) {
      const double exact = outage_probability(c, s, OutageMethod::closed);
      const double asym = outage_probability(c, s, OutageMethod::asymptotic);
      CAPTURE(to_string(s));
      CHECK(rel_gap(asym, exact) < 0.02);
    }
  }
}

TEST_CASE("exact minus asymptotic shrinks with SNR") {
  for (SicMode mode : kModes) {
    double prev = INFINITY;
    for (double rho_db = 30.0; rho_db <= 80.0; rho_db += 10.0) {
      const SystemConfig c = reference(rho_db, mode);
      const double gap = std::abs(outage_xl(c, PairRoles::group_one()).probability -
                                  outage_xl_asymptotic(c, PairRoles::group_one()).probability) +
                         std::abs(outage_xt(c, PairRoles::group_one()).probability -
                                  outage_xt_asymptotic(c, PairRoles::group_one()).probability);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 1e-4);
  }
}

TEST_CASE("the high-SNR floor bounds the exact outage from below") {
  for (SicMode mode : kModes) {
    for (double rho_db : {40.0, 50.0, 60.0, 70.0}) {
      const SystemConfig c = reference(rho_db, mode);
      const double floor_l =
          outage_xl_asymptotic(c, PairRoles::group_one(), AsymptoticLimit::at_infinity).probability;
      const double floor_t =
          outage_xt_asymptotic(c, PairRoles::group_one(), AsymptoticLimit::at_infinity).probability;
      CHECK(floor_l <= outage_xl(c, PairRoles::group_one()).probability + 1e-3);
      CHECK(floor_t <= outage_xt(c, PairRoles::group_one()).probability + 1e-3);
    }
  }
}

TEST_CASE("perfect-SIC floor does not depend on the residual level") {
  SystemConfig a = reference(60.0, SicMode::perfect), b = a;
  b.omega_i_db = 0.0;
  for (Signal s : kSignals) {
    CHECK(outage_probability(a, s, OutageMethod::asymptotic) ==
          outage_probability(b, s, OutageMethod::asymptotic));
  }
}

TEST_CASE("outage is non-increasing in SNR") {
  for (std::size_t i = 0; i < 40; ++i) {
    RandomStream rs(21, i);
    SystemConfig c = random_valid_config(rs, i);
    for (SicMode mode : kModes) {
      c.sic_mode = mode;
      for (Signal s : kSignals) {
        double prev = 1.0;
        for (double rho_db = 0.0; rho_db <= 60.0; rho_db += 2.0) {
          c.rho_db = rho_db;
          const double p = outage_probability(c, s);
          CHECK(p <= prev + 1e-12);
          prev = p;
        }
      }
    }
  }
}

TEST_CASE("perfect SIC outage never exceeds imperfect SIC outage") {
  for (double rho_db = 0.0; rho_db <= 60.0; rho_db += 5.0) {
    for (double w : {0.0, 0.01, 0.1}) {
      SystemConfig ip = reference(rho_db, SicMode::imperfect), p = reference(rho_db, SicMode::perfect);
      ip.varpi1 = ip.varpi2 = p.varpi1 = p.varpi2 = w;
      for (Signal s : kSignals) {
        const double pi = outage_probability(ip, s), pp = outage_probability(p, s);
        CHECK(pp <= pi);
        if (pi > 1e-3) CHECK(pp < pi);
      }
    }
  }
}

TEST_CASE("repeated interference rates are continuous with their neighbours") {
  // At the reference parameters lambda1 = lambda2; nudge varpi1 to either side.
  for (SicMode mode : kModes) {
    for (double rho_db : {10.0, 30.0, 50.0}) {
      const SystemConfig c = reference(rho_db, mode);
      const double base_l = outage_xl(c, PairRoles::group_one()).probability;
      const double base_t = outage_xt(c, PairRoles::group_one()).probability;
      for (double f : {1.0 - 1e-6, 1.0 + 1e-6}) {
        SystemConfig d = c;
        d.varpi1 *= f;
        CHECK(std::abs(outage_xl(d, PairRoles::group_one()).probability - base_l) < 1e-6);
        CHECK(std::abs(outage_xt(d, PairRoles::group_one()).probability - base_t) < 1e-6);
      }
    }
  }
}

TEST_CASE("without inter-antenna interference the reduced terms are used") {
  SystemConfig c = reference(30.0, SicMode::perfect);
  c.varpi1 = 0.0;
  const double p = outage_xl(c, PairRoles::group_one()).probability;
  // Single-term relay interference: J1 = exp(-beta/Omega_l) * lambda Omega_l / (Omega_l lambda + beta).
  const double rho = c.rho(), g = std::exp2(0.2) - 1.0;
  const double beta = g / (rho * 0.8), lambda = 1.0 / (rho * 0.2 * 0.01);
  const double j1 = std::exp(-beta / 0.25) * lambda * 0.25 / (0.25 * lambda + beta);
  const double gt = std::exp2(0.02) - 1.0;
  const double tau = g / (rho * (0.2 - 0.01 * g));
  const double xi = gt / (rho * (0.8 - 0.2 * gt - 0.01 * gt));
  const double j2 = std::exp(-std::max(tau, xi) / 0.25);
  CHECK(p == Approx(1.0 - j1 * j2).epsilon(1e-13));
  CHECK(outage_xt_asymptotic(c, PairRoles::group_one()).probability >= 0.0);
}
