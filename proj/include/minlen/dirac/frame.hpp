#pragma once

// Flat coordinate for the deformed Dirac oscillator.
//
// With f(p) = c0 + beta~ p^2 and c0 = 1 - beta~ (p0)^2, the map
//   q(p) = (beta~ c0)^(-1/2) arctan(sqrt(beta~ / c0) p)
// satisfies dq = dp / f, so the weighted measure dp / f becomes dq, f d/dp becomes d/dq and
// B+- = p(q) -+ omega~ d/dq. The p axis is compactified to (-q_max, q_max) with
// q_max = (pi / 2) (beta~ c0)^(-1/2). For beta~ = 0 the map is the identity.

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "minlen/core/error.hpp"
#include "minlen/dirac/spectrum.hpp"

namespace minlen::dirac {

class Frame {
 public:
  Frame(double beta_tilde, double c0) : beta_(beta_tilde), c0_(c0) {
    if (!(c0 > 0.0))
      throw acceptability_error("1 - beta~ (p0)^2 must be positive for a normalisable weight");
    lambda_ = std::sqrt(beta_ * c0_);
    ratio_ = beta_ > 0.0 ? std::sqrt(c0_ / beta_) : 0.0;
  }

  /// Frame of the level with the given p0.
  static Frame at_p0(const DOParams& params, double p0_tilde) {
    return Frame(params.beta_tilde, 1.0 - params.beta_tilde * p0_tilde * p0_tilde);
  }

  static Frame at_level(const DOParams& params, int n) {
    return Frame(params.beta_tilde, params.beta_tilde == 0.0 ? 1.0 : level_c0(params, n));
  }

  double beta_tilde() const { return beta_; }
  double c0() const { return c0_; }
  bool compact() const { return beta_ > 0.0; }

  double q_max() const {
    return compact() ? 0.5 * std::numbers::pi / lambda_ : std::numeric_limits<double>::infinity();
  }

  double p(double q) const { return compact() ? ratio_ * std::tan(lambda_ * q) : q; }
  double q(double p) const { return compact() ? std::atan(p / ratio_) / lambda_ : p; }
  double f(double p) const { return c0_ + beta_ * p * p; }

  /// V(q) in H = B+B- = -omega~^2 d^2/dq^2 + p^2 - omega~ f.
  double potential(double q, double omega_tilde) const {
    const double pp = p(q);
    return pp * pp - omega_tilde * f(pp);
  }

  /// V for the partner B-B+ = -omega~^2 d^2/dq^2 + p^2 + omega~ f.
  double partner_potential(double q, double omega_tilde) const {
    const double pp = p(q);
    return pp * pp + omega_tilde * f(pp);
  }

  /// Half-width of a box that holds the first `levels` states to below 1e-16 relative
  /// amplitude: harmonic width around q = 0 plus a fixed number of widths, capped at
  /// q_max. Near q = 0, V ~ -omega~ c0 + c0^2 (1 - beta~ omega~) q^2 and V grows faster
  /// than this quadratic away from the origin.
  double box_half_width(double omega_tilde, int levels) const {
    const double stiffness = 1.0 - beta_ * omega_tilde;
    if (stiffness <= 0.0) return q_max();
    const double sigma = std::sqrt(omega_tilde / (c0_ * std::sqrt(stiffness)));
    const double reach = sigma * (std::sqrt(2.0 * std::max(levels, 0) + 1.0) + 10.0);
    return std::min(reach, q_max());
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.beta_ == b.beta_ && a.c0_ == b.c0_;
  }

 private:
  double beta_, c0_, lambda_, ratio_;
};

/// Uniform grid of interior nodes q_i = -L + i h, i = 1..N, h = 2L/(N+1). Odd N puts a
/// node at q = 0.
struct UniformGrid {
  double half_width = 1.0;
  std::size_t size = 0;

  double spacing() const { return 2.0 * half_width / double(size + 1); }
  double node(std::size_t i) const { return -half_width + double(i + 1) * spacing(); }
  /// Cell midpoints -L + (j + 1/2) h, j = 0..N.
  double midpoint(std::size_t j) const { return -half_width + (double(j) + 0.5) * spacing(); }

  std::vector<double> nodes() const {
    std::vector<double> out(size);
    for (std::size_t i = 0; i < size; ++i) out[i] = node(i);
    return out;
  }

  /// Same box, spacing halved: N -> 2N + 1.
  UniformGrid refined() const { return {half_width, 2 * size + 1}; }
};

}  // namespace minlen::dirac
