// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/hypoexp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "twrnoma/derived_constants.hpp"

namespace twrnoma {

HypoexpSpec::HypoexpSpec(std::vector<double> rates) : rates_(std::move(rates)) {
  if (rates_.empty()) throw std::invalid_argument("hypoexponential rate list is empty");
  if (rates_.size() > 3) throw std::invalid_argument("at most three hypoexponential stages");
  for (double x : rates_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("hypoexponential rates must be positive and finite");
    }
  }
  distinct_ = rates_pairwise_distinct(rates_);
  well_separated_ = true;
  for (std::size_t i = 0; i < rates_.size(); ++i)
    for (std::size_t j = i + 1; j < rates_.size(); ++j)
      if (std::abs(rates_[i] - rates_[j]) < kPartialFractionGap * std::max(rates_[i], rates_[j]))
        well_separated_ = false;
}

double HypoexpSpec::mean() const noexcept {
  return std::accumulate(rates_.begin(), rates_.end(), 0.0,
                         [](double acc, double x) { return acc + 1.0 / x; });
}

double exp_divided_difference(std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  if (n == 0 || n > 3) throw std::invalid_argument("exp_divided_difference takes 1..3 nodes");
  using Mat = std::array<std::array<double, 3>, 3>;

  const double shift = *std::max_element(nodes.begin(), nodes.end());
  double spread = 1.0;
  for (double t : nodes) spread = std::max(spread, shift - t + 1.0);
  const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(spread / 0.25))));
  const double scale = std::ldexp(1.0, -squarings);

  Mat m{};
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = (nodes[i] - shift) * scale;
    if (i + 1 < n) m[i][i + 1] = scale;
  }

  auto multiply = [n](const Mat& x, const Mat& y) {
    Mat z{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t p = i; p <= j; ++p) z[i][j] += x[i][p] * y[p][j];
    return z;
  };

  // Taylor series; the scaled matrix has norm below 0.5, 24 terms reach 1e-24.
  Mat sum{}, term{};
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = term[i][i] = 1.0;
  for (int order = 1; order <= 24; ++order) {
    term = multiply(term, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        term[i][j] /= order;
        sum[i][j] += term[i][j];
      }
  }
  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum[0][n - 1] * std::exp(shift);
}

double hypoexp_pdf(const HypoexpSpec& spec, double z) {
  if (!(z >= 0.0)) throw std::invalid_argument("hypoexp_pdf requires z >= 0");
  const auto& lam = spec.rates();
  const std::size_t n = lam.size();
  const double prod = std::accumulate(lam.begin(), lam.end(), 1.0, std::multiplies<>());

  if (n == 1) return lam[0] * std::exp(-lam[0] * z);

  double density;
  if (spec.well_separated()) {
    density = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= lam[j] - lam[i];
      density += std::exp(-lam[i] * z) / denom;
    }
    density *= prod;
  } else {
    std::array<double, 3> nodes{};
    for (std::size_t i = 0; i < n; ++i) nodes[i] = -lam[i] * z;
    density = prod * std::pow(z, static_cast<double>(n - 1)) *
              exp_divided_difference(std::span<const double>(nodes.data(), n));
  }
  // Partial fractions can leave rounding dust of either sign near z = 0.
  return std::max(density, 0.0);
}

double hypoexp_laplace(const HypoexpSpec& spec, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("hypoexp_laplace requires s >= 0");
  double out = 1.0;
  for (double x : spec.rates()) out *= x / (x + s);
  return out;
}

}  // namespace twrnoma
