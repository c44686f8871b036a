#pragma once

#include <stdexcept>
#include <string>

namespace minlen {

/// Vector/operator built over a different number of spacetime components.
class dimension_error : public std::invalid_argument {
 public:
  explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A quantity that is only defined for some parameter values was requested outside them
/// (e.g. the weight exponent with beta = beta' = 0).
class undefined_parameter_error : public std::domain_error {
 public:
  explicit undefined_parameter_error(const std::string& what) : std::domain_error(what) {}
};

/// The state or level violates (beta + beta') (p^0)^2 < 1, or a related positivity
/// requirement of the scalar-product weight.
class acceptability_error : public std::domain_error {
 public:
  explicit acceptability_error(const std::string& what) : std::domain_error(what) {}
};

/// Quantum numbers outside the allowed (n, tau) ranges.
class quantum_number_error : public std::invalid_argument {
 public:
  explicit quantum_number_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Iterative numerics that failed to settle under grid refinement.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minlen
