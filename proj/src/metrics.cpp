// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/metrics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"
#include "twrnoma/outage.hpp"

namespace twrnoma {

double diversity_order_estimate(const std::function<double(double)>& outage, double rho_lo_db,
                                double rho_hi_db) {
  if (!(rho_hi_db > rho_lo_db) || !(rho_lo_db >= 40.0)) {
    throw ConfigError(fmt::format(
        "diversity estimate needs 40 dB <= rho_lo < rho_hi, got [{}, {}]", rho_lo_db, rho_hi_db));
  }
  const double p_lo = outage(rho_lo_db);
  const double p_hi = outage(rho_hi_db);
  if (!(p_lo > 0.0) || !(p_hi > 0.0)) {
    throw NumericError("diversity order undefined: outage probability is zero");
  }
  const double log_rho_ratio = (rho_hi_db - rho_lo_db) / 10.0 * std::log(10.0);
  return -(std::log(p_hi) - std::log(p_lo)) / log_rho_ratio;
}

double throughput_delay_limited(const SystemConfig& config, const std::array<double, 4>& outage) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (!(outage[i] >= 0.0 && outage[i] <= 1.0)) {
      throw NumericError(fmt::format("outage of x{} = {} outside [0,1]", i + 1, outage[i]));
    }
    sum += (1.0 - outage[i]) * config.rates[i];
  }
  return sum;
}

std::array<double, 4> closed_form_outages(const SystemConfig& config) {
  return {outage_probability(config, Signal::x1), outage_probability(config, Signal::x2),
          outage_probability(config, Signal::x3), outage_probability(config, Signal::x4)};
}

}  // namespace twrnoma
