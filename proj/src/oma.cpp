// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/oma.hpp"

#include <cmath>

#include "twrnoma/errors.hpp"

namespace twrnoma {

double oma_outage(const SystemConfig& config, const PairRoles& roles, SignalRole signal, int phases) {
  config.validate();
  roles.validate();
  if (phases < 1) throw ConfigError("OMA needs at least one phase");
  const int src = signal == SignalRole::strong ? roles.l : roles.t;
  const int dst = signal == SignalRole::strong ? roles.k : roles.r;
  const double gamma = std::exp2(phases * config.rates[src - 1]) - 1.0;
  const double rho = config.rho();
  return -std::expm1(-gamma / (rho * config.omega[src - 1]) - gamma / (rho * config.omega[dst - 1]));
}

double oma_outage(const SystemConfig& config, Signal signal, int phases) {
  return oma_outage(config, roles_for(signal), role_of(signal), phases);
}

std::array<double, 4> oma_outages(const SystemConfig& config, int phases) {
  return {oma_outage(config, Signal::x1, phases), oma_outage(config, Signal::x2, phases),
          oma_outage(config, Signal::x3, phases), oma_outage(config, Signal::x4, phases)};
}

}  // namespace twrnoma
