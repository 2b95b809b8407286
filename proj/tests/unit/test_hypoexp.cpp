// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "twrnoma/hypoexp.hpp"
#include "twrnoma/quadrature.hpp"

using namespace twrnoma;
using doctest::Approx;

namespace {

double total_mass(const std::vector<double>& rates) {
  const HypoexpSpec spec(rates);
  QuadSpec q;
  q.rel_tol = 1e-11;
  return integrate_to_infinity([&](double z) { return hypoexp_pdf(spec, z); }, 0.0, spec.mean(), q).value;
}

}  // namespace

TEST_CASE("hypoexponential density: point values") {
  CHECK(hypoexp_pdf(HypoexpSpec({1, 2, 3}), 0.0) == Approx(0.0).epsilon(1e-15));
  CHECK(hypoexp_pdf(HypoexpSpec({2}), 0.0) == 2.0);
  CHECK(hypoexp_pdf(HypoexpSpec({2}), 1.5) == Approx(2.0 * std::exp(-3.0)).epsilon(1e-15));
  CHECK(hypoexp_pdf(HypoexpSpec({1, 1}), 1.0) == Approx(std::exp(-1.0)).epsilon(1e-14));
  // Erlang-3 with rate 2: 2^3 z^2 e^{-2z} / 2
  CHECK(hypoexp_pdf(HypoexpSpec({2, 2, 2}), 0.7) ==
        Approx(4.0 * 0.49 * std::exp(-1.4)).epsilon(1e-13));
  // Two distinct rates: l1 l2 / (l2 - l1) (e^{-l1 z} - e^{-l2 z})
  CHECK(hypoexp_pdf(HypoexpSpec({1, 3}), 0.5) ==
        Approx(1.5 * (std::exp(-0.5) - std::exp(-1.5))).epsilon(1e-14));
}

TEST_CASE("hypoexponential density integrates to one") {
  const std::vector<std::vector<double>> sets{
      {0.5},        {1, 2},          {1, 1},          {3, 1e-3},           {1, 2, 3},
      {1, 1, 1},    {1, 1, 4},       {2, 1, 2},       {1, 1 + 1e-10, 5},   {500, 500, 8000},
      {1e-4, 7, 7}, {1, 1 + 1e-7},   {1, 1 + 1e-5, 1 + 2e-5}};
  for (const auto& rates : sets) {
    CAPTURE(rates.size());
    CAPTURE(rates[0]);
    CHECK(std::abs(total_mass(rates) - 1.0) <= 1e-8);
  }
}

TEST_CASE("density is continuous across the degeneracy threshold") {
  for (double z : {0.01, 0.3, 1.0, 4.0}) {
    const double exact = hypoexp_pdf(HypoexpSpec({1, 1, 2}), z);
    for (double gap : {1e-12, 1e-9, 1e-8, 1e-6}) {
      const double near = hypoexp_pdf(HypoexpSpec({1, 1 + gap, 2}), z);
      CHECK(std::abs(near - exact) <= 2.0 * gap + 1e-13);
    }
  }
}

TEST_CASE("Laplace transform matches the product form and quadrature") {
  const HypoexpSpec spec({1, 2, 2});
  CHECK(hypoexp_laplace(spec, 0.0) == 1.0);
  CHECK(hypoexp_laplace(spec, 0.5) == Approx(1.0 / 1.5 * (2.0 / 2.5) * (2.0 / 2.5)).epsilon(1e-15));
  QuadSpec q;
  q.rel_tol = 1e-12;
  const double numeric =
      integrate_to_infinity([&](double z) { return hypoexp_pdf(spec, z) * std::exp(-0.5 * z); }, 0.0, 1.0, q).value;
  CHECK(numeric == Approx(hypoexp_laplace(spec, 0.5)).epsilon(1e-10));
}

TEST_CASE("divided differences of exp") {
  const std::array<double, 1> one{0.3};
  CHECK(exp_divided_difference(one) == Approx(std::exp(0.3)).epsilon(1e-15));
  const std::array<double, 2> two{-1.0, -3.0};
  CHECK(exp_divided_difference(two) == Approx((std::exp(-1.0) - std::exp(-3.0)) / 2.0).epsilon(1e-14));
  const std::array<double, 2> rep{-2.0, -2.0};
  CHECK(exp_divided_difference(rep) == Approx(std::exp(-2.0)).epsilon(1e-14));
  const std::array<double, 3> triple{-1.0, -1.0, -1.0};
  CHECK(exp_divided_difference(triple) == Approx(std::exp(-1.0) / 2.0).epsilon(1e-14));
  // Widely spread nodes, including a large negative one.
  const std::array<double, 3> wide{0.0, -50.0, -400.0};
  const double f01 = (1.0 - std::exp(-50.0)) / 50.0;
  const double f12 = (std::exp(-50.0) - std::exp(-400.0)) / 350.0;
  CHECK(exp_divided_difference(wide) == Approx((f01 - f12) / 400.0).epsilon(1e-12));
}

TEST_CASE("invalid rate sets are rejected") {
  CHECK_THROWS_AS(HypoexpSpec({}), std::invalid_argument);
  CHECK_THROWS_AS(HypoexpSpec({1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(HypoexpSpec({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(HypoexpSpec({1, INFINITY}), std::invalid_argument);
}
