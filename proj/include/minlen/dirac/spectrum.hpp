#pragma once

// Closed-form spectrum of the (1+1)-dimensional Dirac oscillator with beta' = 0.
//
// The factorised large-component equation B+B- psi1 = e psi1 has eigenvalues
//   e_n(p0) = K_n [1 - beta~ p0^2],   K_n = omega~ n (2 + beta~ omega~ n),
// and consistency with e = p0^2 - 1 quantises p0:
//   p0^2 = (1 + K_n) / (1 + beta~ K_n) = (1 + K_n) / (1 + beta~ omega~ n)^2.

#include <cmath>
#include <limits>
#include <vector>

#include "minlen/dirac/params.hpp"

namespace minlen::dirac {

inline double level_K(const DOParams& params, int n) {
  const double wn = params.omega_tilde * n;
  return wn * (2.0 + params.beta_tilde * wn);
}

/// e_n(p0) = omega~ n (2 + beta~ omega~ n) (1 - beta~ p0^2).
inline double e_formula(const DOParams& params, int n, double p0_tilde) {
  if (n < 0) throw quantum_number_error("n must be nonnegative");
  return level_K(params, n) * (1.0 - params.beta_tilde * p0_tilde * p0_tilde);
}

/// (p0)^2 = (1 + K_n) / (1 + beta~ K_n); exact 1 at n = 0 and free of cancellation for small beta~.
inline double p0_squared(const DOParams& params, int n) {
  const double K = level_K(params, n);
  return (1.0 + K) / (1.0 + params.beta_tilde * K);
}

/// 1 - beta~ p0^2 = (1 - beta~) / (1 + beta~ omega~ n)^2 without cancellation.
inline double level_c0(const DOParams& params, int n) {
  const double g = 1.0 + params.beta_tilde * params.omega_tilde * n;
  return (1.0 - params.beta_tilde) / (g * g);
}

/// tau sqrt((1 + K) / (1 + beta~ K)).
inline double p0_allowed(const DOParams& params, const QuantumNumber& qn) {
  qn.validate();
  return qn.tau * std::sqrt(p0_squared(params, qn.n));
}

/// The two closed forms for p0: tau sqrt((1+K)/(1+beta~ K)) and
/// tau beta~^(-1/2) (1 + (beta~ - 1)/(1 + beta~ omega~ n)^2)^(1/2). Both are returned so
/// callers can confirm they agree (the second needs beta~ > 0).
struct P0Forms {
  double ratio_form;
  double bounded_form;
};

inline P0Forms p0_closed_forms(const DOParams& params, const QuantumNumber& qn) {
  qn.validate();
  const double K = level_K(params, qn.n);
  const double bt = params.beta_tilde;
  P0Forms f{};
  f.ratio_form = qn.tau * std::sqrt((1.0 + K) / (1.0 + bt * K));
  if (bt > 0.0) {
    const double g = 1.0 + bt * params.omega_tilde * qn.n;
    f.bounded_form = qn.tau / std::sqrt(bt) * std::sqrt(1.0 + (bt - 1.0) / (g * g));
  } else {
    f.bounded_form = std::numeric_limits<double>::quiet_NaN();
  }
  return f;
}

/// E_{n,tau} in the units of params.units:
///   E = tau (c / sqrt(beta)) (1 + (beta m^2 c^2 - 1) / (1 + beta m hbar omega n)^2)^(1/2),
/// evaluated as tau m c^2 |p0~| with the ratio form, so E_{0,+} = m c^2 exactly.
inline double energy(const DOParams& params, const QuantumNumber& qn) {
  qn.validate();
  params.require_physical("energy");
  return params.require_units().rest_energy() * p0_allowed(params, qn);
}

struct SpectrumLevel {
  QuantumNumber qn;
  double K = 0.0;
  double p0_tilde = 0.0;
  double e_n = 0.0;
  /// E / (m c^2) = p0~.
  double E_over_mc2 = 0.0;
  /// Present when the parameters carry a dimensional set.
  std::optional<double> E;
};

inline SpectrumLevel spectrum_level(const DOParams& params, const QuantumNumber& qn) {
  qn.validate();
  SpectrumLevel level;
  level.qn = qn;
  level.K = level_K(params, qn.n);
  level.p0_tilde = p0_allowed(params, qn);
  level.e_n = e_formula(params, qn.n, level.p0_tilde);
  level.E_over_mc2 = level.p0_tilde;
  if (params.units) level.E = level.p0_tilde * params.units->rest_energy();
  return level;
}

struct SpectrumTable {
  std::vector<SpectrumLevel> levels;
  bool physical = true;
  /// |E| strictly increasing in n within each tau branch.
  bool monotonic = true;
  /// 1 <= |E|/mc^2 < 1/sqrt(beta~) (beta~ > 0).
  bool bounded = true;

  /// Raised when |E| fails to increase with n, the signature of beta~ >= 1.
  bool monotonicity_violation() const { return !monotonic; }
};

/// Every level with n <= n_max: tau = +1 first (n = 0..n_max), then tau = -1 (n = 1..n_max).
inline SpectrumTable spectrum_table(const DOParams& params, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  params.require_physical("spectrum_table");
  SpectrumTable table;
  table.physical = params.physical();
  for (int tau : {1, -1}) {
    double previous = -1.0;
    for (int n = (tau == 1 ? 0 : 1); n <= n_max; ++n) {
      SpectrumLevel level = spectrum_level(params, {n, tau});
      const double mag = std::abs(level.p0_tilde);
      if (previous >= 0.0 && !(mag > previous)) table.monotonic = false;
      previous = mag;
      if (mag < 1.0) table.bounded = false;
      if (params.beta_tilde > 0.0 && !(params.beta_tilde * mag * mag < 1.0)) table.bounded = false;
      table.levels.push_back(level);
    }
  }
  return table;
}

}  // namespace minlen::dirac
