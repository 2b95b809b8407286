// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace twrnoma {

/// Sum of 1 to 3 independent exponentials with the given (positive) rates.
class HypoexpSpec {
 public:
  /// Throws std::invalid_argument for an empty list, more than three rates,
  /// or a rate that is not positive and finite.
  explicit HypoexpSpec(std::vector<double> rates);

  const std::vector<double>& rates() const noexcept { return rates_; }
  std::size_t size() const noexcept { return rates_.size(); }
  /// Pairwise separated beyond kDegenerateRateTolerance.
  bool distinct() const noexcept { return distinct_; }
  /// Pairwise relative gap of at least kPartialFractionGap; only then does the
  /// density use partial fractions.
  bool well_separated() const noexcept { return well_separated_; }
  double mean() const noexcept;

 private:
  std::vector<double> rates_;
  bool distinct_;
  bool well_separated_;
};

/// Relative rate gap below which partial fractions lose more than ~1e-13 to
/// cancellation in (lambda_j - lambda_i).
inline constexpr double kPartialFractionGap = 1e-3;

/// Density at z >= 0. Well-separated rates use the partial-fraction expansion
///   f(z) = prod(lambda) * sum_i exp(-lambda_i z) / prod_{j != i} (lambda_j - lambda_i);
/// close or repeated rates evaluate the same quantity as a divided difference
///   f(z) = prod(lambda) * z^(n-1) * exp[-lambda_1 z, ..., -lambda_n z],
/// which reduces to the Erlang density when all rates coincide.
double hypoexp_pdf(const HypoexpSpec& spec, double z);

/// E[exp(-s Z)] = prod_i lambda_i / (lambda_i + s), s >= 0. Valid for any rate
/// set; this is the divided difference of 1/(x + s) over the rates in closed form.
double hypoexp_laplace(const HypoexpSpec& spec, double s);

/// Divided difference exp[t_1, ..., t_n] of the exponential over 1..3 nodes,
/// repeated nodes allowed. Evaluated as the corner entry of the exponential of
/// the bidiagonal matrix with the nodes on its diagonal, by scaling and squaring.
/// The squaring phase multiplies non-negative matrices, so close nodes cost no accuracy.
double exp_divided_difference(std::span<const double> nodes);

}  // namespace twrnoma
