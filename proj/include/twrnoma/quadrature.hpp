// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace twrnoma {

struct QuadSpec {
  double abs_tol = 1e-15;
  double rel_tol = 1e-9;
  /// Budget of live intervals before giving up with OracleError.
  std::size_t max_subdivisions = 200000;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Globally adaptive Simpson quadrature on [a, b]: the interval with the largest
/// Richardson error estimate is bisected until the summed estimate is within
/// max(abs_tol, rel_tol * |I|). Throws OracleError when the budget runs out or
/// the integrand returns a non-finite value.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec = {});

/// Integral over [a, inf) through x = a + scale (1 - u) / u, u in (0, 1].
/// `scale` should be the length over which the integrand decays.
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double scale,
                                 const QuadSpec& spec = {});

}  // namespace twrnoma
