// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "twrnoma/channel.hpp"
#include "twrnoma/config.hpp"
#include "twrnoma/config_file.hpp"
#include "twrnoma/derived_constants.hpp"
#include "twrnoma/errors.hpp"
#include "twrnoma/random_stream.hpp"

using namespace twrnoma;
using doctest::Approx;

TEST_CASE("reference configuration is valid") {
  SystemConfig c;
  CHECK_NOTHROW(c.validate());
  const auto om = omegas_from_distances(2.0, 10.0, 2.0);
  for (int i = 0; i < 4; ++i) CHECK(om[i] == Approx(c.omega[i]).epsilon(1e-15));
  CHECK(c.rho() == Approx(1000.0));
  CHECK(c.omega_i() == Approx(0.01));
}

TEST_CASE("configuration invariants are enforced") {
  auto bad = [](auto mutate) {
    SystemConfig c;
    mutate(c);
    CHECK_THROWS_AS(c.validate(), ConfigError);
  };
  bad([](SystemConfig& c) { c.b = {0.6, 0.4, 0.2, 0.8}; });   // weak user gets less power
  bad([](SystemConfig& c) { c.b = {0.2, 0.7, 0.2, 0.8}; });   // split does not sum to one
  bad([](SystemConfig& c) { c.a[0] = 1.0; });
  bad([](SystemConfig& c) { c.a[1] = 0.0; });
  bad([](SystemConfig& c) { c.omega[2] = 0.0; });
  bad([](SystemConfig& c) { c.varpi1 = 1.5; });
  bad([](SystemConfig& c) { c.varpi2 = -0.1; });
  bad([](SystemConfig& c) { c.rates[3] = -0.01; });
  bad([](SystemConfig& c) { c.omega_i_db = -INFINITY; });
}

TEST_CASE("SIC mode parsing is strictly binary") {
  CHECK(parse_sic_mode("ip") == SicMode::imperfect);
  CHECK(parse_sic_mode("ipSIC") == SicMode::imperfect);
  CHECK(parse_sic_mode("1") == SicMode::imperfect);
  CHECK(parse_sic_mode("p") == SicMode::perfect);
  CHECK(parse_sic_mode("0") == SicMode::perfect);
  CHECK_THROWS_AS(parse_sic_mode("0.5"), ConfigError);
  CHECK(sic_epsilon(SicMode::imperfect) == 1.0);
  CHECK(sic_epsilon(SicMode::perfect) == 0.0);
}

TEST_CASE("role tuples") {
  CHECK_NOTHROW(PairRoles::group_one().validate());
  CHECK_NOTHROW(PairRoles::group_two().validate());
  CHECK_THROWS_AS((PairRoles{1, 4, 3, 2}).validate(), ConfigError);
  CHECK_THROWS_AS((PairRoles{1, 2, 1, 4}).validate(), ConfigError);
  CHECK(roles_for(Signal::x1) == PairRoles::group_one());
  CHECK(roles_for(Signal::x4) == PairRoles::group_two());
  CHECK(role_of(Signal::x2) == SignalRole::weak);
  CHECK(role_of(Signal::x3) == SignalRole::strong);
  CHECK(parse_signal("x3") == Signal::x3);
  CHECK_THROWS_AS(parse_signal("x5"), ConfigError);
}

TEST_CASE("scenario file parsing") {
  const auto s = parse_scenario(
      "# comment\n"
      "rho_db = 20\n"
      "d1=2\n d2=10\nalpha=2\n"
      "varpi1=0.05  # trailing\n"
      "sic_mode=p\n"
      "trials=5000\nseed=9\n");
  CHECK(s.config.rho_db == 20.0);
  CHECK(s.config.omega[1] == Approx(0.01));
  CHECK(s.config.varpi1 == 0.05);
  CHECK(s.config.sic_mode == SicMode::perfect);
  CHECK(*s.trials == 5000);
  CHECK(*s.seed == 9);

  CHECK_THROWS_AS(parse_scenario("bogus=1\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("rho_db=1\nrho_db=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("rho_db=abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("omega1=0.2\nd1=2\nd2=10\nalpha=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("d1=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("b1=0.9\nb2=0.1\n"), ConfigError);
  try {
    parse_scenario("rho_db=1\n\nnope=3\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("derived constants at reference parameters") {
  SystemConfig c;
  c.rho_db = 0.0;
  const auto d = build_derived_constants(c, PairRoles::group_one());
  CHECK(d.relay_rates.size() == 3);
  CHECK(d.relay_rates[0] == Approx(500.0).epsilon(1e-12));
  CHECK(d.gamma_th[0] == Approx(0.148698354997035).epsilon(1e-12));
  CHECK(target_sinr(0.1) == Approx(std::pow(2.0, 0.2) - 1.0).epsilon(1e-15));
  CHECK(d.feasible_l);
  CHECK(d.feasible_t);
  // varpi1 a_3 Omega_3 = a_2 Omega_2 here, so the first two rates coincide.
  CHECK(rates_degenerate(d.relay_rates[0], d.relay_rates[1]));
  CHECK_FALSE(d.phi.has_value());
  CHECK(d.cross_rates.size() == 2);
  CHECK(d.theta_l.has_value());
  CHECK(*d.theta_l == doctest::Approx(std::max(*d.tau_l, *d.xi_t)));
}

TEST_CASE("feasibility flags") {
  SystemConfig c;
  c.b = {0.001, 0.999, 0.2, 0.8};
  c.varpi2 = 0.5;
  const auto d = build_derived_constants(c, PairRoles::group_one());
  CHECK_FALSE(d.feasible_l);
  CHECK_FALSE(d.tau_l.has_value());
  CHECK_FALSE(d.theta_l.has_value());

  SystemConfig ok;
  const auto e = build_derived_constants(ok, PairRoles::group_one());
  CHECK(ok.b[0] > ok.varpi2 * e.gamma_th[0]);
  CHECK(e.feasible_l);
}

TEST_CASE("zero rates give zero thresholds and feasible flags") {
  SystemConfig c;
  c.rates = {0, 0, 0, 0};
  for (auto roles : {PairRoles::group_one(), PairRoles::group_two()}) {
    const auto d = build_derived_constants(c, roles);
    for (double g : d.gamma_th) CHECK(g == 0.0);
    CHECK(d.feasible_l);
    CHECK(d.feasible_t);
  }
}

TEST_CASE("inactive interference terms are not populated") {
  SystemConfig c;
  c.varpi1 = 0.0;
  const auto d = build_derived_constants(c, PairRoles::group_one());
  CHECK(d.relay_rates.size() == 1);
  CHECK(d.cross_rates.empty());
  CHECK_FALSE(d.phi.has_value());

  c.varpi1 = 0.3;
  const auto e = build_derived_constants(c, PairRoles::group_one());
  CHECK(e.relay_rates.size() == 3);
  CHECK(e.phi.has_value());
}

TEST_CASE("Philox4x32-10 known-answer vectors") {
  const auto zero = philox4x32_10({0, 0, 0, 0}, {0, 0});
  CHECK(zero == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  const auto ones = philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
  CHECK(ones == PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  const auto pi = philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
  CHECK(pi == PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("random streams are deterministic and disjoint") {
  RandomStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differs_stream |= x != c.next_u64();
    differs_seed |= x != d.next_u64();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);
  CHECK(a.position() == 100);

  RandomStream u(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.uniform();
    REQUIRE(x > 0.0);
    REQUIRE(x <= 1.0);
  }
}

TEST_CASE("channel samples have the configured means") {
  SystemConfig c;
  RandomStream s(7, 0);
  const ChannelSampler sampler(c);
  constexpr int n = 1'000'000;
  double sum = 0.0, sum_i = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto x = sampler(s);
    REQUIRE(x.gain[0] >= 0.0);
    sum += x.gain[0];
    sum_i += x.residual;
  }
  CHECK(std::abs(sum / n - 0.25) < 3.0 * 0.25 / 1000.0);
  CHECK(std::abs(sum_i / n - 0.01) < 3.0 * 0.01 / 1000.0);
}

TEST_CASE("perfect SIC zeroes the residual and keeps the channel gains") {
  SystemConfig ip, p;
  p.sic_mode = SicMode::perfect;
  RandomStream a(5, 1), b(5, 1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = sample_channels(a, ip);
    const auto y = sample_channels(b, p);
    REQUIRE(y.residual == 0.0);
    REQUIRE(x.gain == y.gain);
  }
}
