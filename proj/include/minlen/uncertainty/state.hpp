#pragma once

// Moments of a computed Dirac-oscillator state, in the dimensionless units of the
// oscillator (hbar = 1, momenta in m c, lengths in hbar / (m c)).
//
// X = i f d/dp is Hermitian under the weight 1/f, so <X^2> = ||X psi||^2. <(P^0)^2> is the
// sharp value (p0)^2 of the level.

#include <cmath>
#include <stdexcept>
#include <string>

#include "minlen/dirac/wavefunction.hpp"
#include "minlen/uncertainty/relations.hpp"

namespace minlen::uncertainty {

struct StateMoments {
  MomentSet<double> moments;
  double deltaX = 0.0;
  double deltaP = 0.0;
  /// |<X>|; zero up to quadrature error for real spinors.
  double mean_X = 0.0;
};

inline StateMoments state_moments(const dirac::WavefunctionGrid& grid, const dirac::DOParams& params,
                                  double norm_tol = 1e-6) {
  const double norm = grid.norm_squared();
  if (std::abs(norm - 1.0) > norm_tol)
    throw std::domain_error("state_moments: state is not normalised (norm^2 = " + std::to_string(norm) + ")");
  if (grid.beta_tilde != params.beta_tilde || grid.omega_tilde != params.omega_tilde)
    throw std::invalid_argument("state_moments: parameters differ from the grid's");

  const dirac::Frame frame = grid.frame();
  double mean_p = 0.0, meansq_p = 0.0, meansq_x = 0.0, cross = 0.0;
  for (int c = 0; c < 2; ++c) {
    const auto& psi = c == 0 ? grid.psi1 : grid.psi2;
    const auto d = dirac::detail::first_derivative(psi, grid.spacing, dirac::detail::kD1Order8);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double w = grid.weight[i];
      const double x_psi = grid.f[i] / frame.f(grid.p[i]) * d[i];  // X psi = i x_psi
      mean_p += w * grid.p[i] * psi[i] * psi[i];
      meansq_p += w * grid.p[i] * grid.p[i] * psi[i] * psi[i];
      meansq_x += w * x_psi * x_psi;
      cross += w * psi[i] * x_psi;
    }
  }
  StateMoments out;
  const double spread = std::sqrt(std::max(0.0, meansq_p - mean_p * mean_p));
  out.moments = MomentSet<double>(1, {mean_p}, {spread}, grid.level.p0_tilde * grid.level.p0_tilde);
  out.mean_X = std::abs(cross);
  out.deltaP = spread;
  out.deltaX = std::sqrt(std::max(0.0, meansq_x - cross * cross));
  return out;
}

/// Dimensionless bound for a one-dimensional oscillator state (beta = beta~, beta' = 0).
inline double state_bound(const StateMoments& s, const dirac::DOParams& params) {
  return ur_bound(s.moments, DeformationParams<double>(params.beta_tilde, 0.0), 1, 1.0);
}

}  // namespace minlen::uncertainty
