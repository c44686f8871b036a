#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "minlen/core/error.hpp"

namespace minlen::dirac {

/// Physical mode refuses beta~ >= 1; diagnostic mode evaluates the formulas anyway and
/// labels the output unphysical.
enum class Mode { physical, diagnostic };

/// m, c, hbar, omega in any consistent unit system.
struct DimensionalSet {
  double mass = 1.0;
  double light_speed = 1.0;
  double hbar = 1.0;
  double omega = 1.0;

  double rest_energy() const { return mass * light_speed * light_speed; }
  /// a = hbar / (m c), the length unit of the dimensionless operators.
  double length_unit() const { return hbar / (mass * light_speed); }
  double momentum_unit() const { return mass * light_speed; }
};

/// Dimensionless Dirac-oscillator parameters: beta~ = beta m^2 c^2, omega~ = hbar omega / (m c^2).
struct DOParams {
  double beta_tilde = 0.0;
  double omega_tilde = 0.1;
  Mode mode = Mode::physical;
  std::optional<DimensionalSet> units;

  DOParams() = default;
  DOParams(double beta_t, double omega_t, Mode m = Mode::physical)
      : beta_tilde(beta_t), omega_tilde(omega_t), mode(m) {
    validate();
  }

  /// Builds the dimensionless pair from beta and the dimensional set.
  static DOParams from_dimensional(double beta, const DimensionalSet& u, Mode m = Mode::physical) {
    DOParams p(beta * u.mass * u.mass * u.light_speed * u.light_speed,
               u.hbar * u.omega / u.rest_energy(), m);
    p.units = u;
    return p;
  }

  /// beta in the units of the dimensional set.
  double beta() const {
    const auto& u = require_units();
    return beta_tilde / (u.momentum_unit() * u.momentum_unit());
  }

  const DimensionalSet& require_units() const {
    if (!units) throw std::invalid_argument("dimensional set not provided");
    return *units;
  }

  bool physical() const { return beta_tilde < 1.0; }

  void validate() const {
    if (!(beta_tilde >= 0.0) || !std::isfinite(beta_tilde))
      throw std::invalid_argument("beta~ must be a finite nonnegative number");
    if (!(omega_tilde > 0.0) || !std::isfinite(omega_tilde))
      throw std::invalid_argument("omega~ must be positive");
  }

  /// Throws unless the physical-mode restriction beta~ < 1 holds (or diagnostic mode is on).
  void require_physical(const std::string& what) const {
    if (mode == Mode::physical && !physical())
      throw acceptability_error(what + ": beta~ = " + std::to_string(beta_tilde) +
                                " >= 1 is unphysical (|E| would decrease with n); use diagnostic mode");
  }
};

/// (n, tau): n = 0, 1, 2, ... for tau = +1 and n = 1, 2, ... for tau = -1.
struct QuantumNumber {
  int n = 0;
  int tau = 1;

  bool valid() const { return (tau == 1 && n >= 0) || (tau == -1 && n >= 1); }

  void validate() const {
    if (tau != 1 && tau != -1) throw quantum_number_error("tau must be +1 or -1");
    if (!valid())
      throw quantum_number_error("(n, tau) = (" + std::to_string(n) + ", " + std::to_string(tau) +
                                 ") outside the allowed range: n >= 0 for tau = +1, n >= 1 for tau = -1");
  }

  friend bool operator==(const QuantumNumber&, const QuantumNumber&) = default;
};

}  // namespace minlen::dirac
