// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace twrnoma {

/// Invalid scenario parameters, role tuples, config files or CLI input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula produced NaN, overflowed, or left the probability range.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature failed to converge within its subdivision budget.
class OracleError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace twrnoma
