#pragma once

// Sampled Dirac-oscillator spinors on the flat-coordinate grid.
//
// psi1 is the n-th eigenvector of H = -omega~^2 d^2/dq^2 + p^2 - omega~ f, discretised with
// eighth-order central differences in the level's own frame (banded, kd = 4). psi2 follows
// from B- psi1 = (p0 + 1) psi2. Values are functions of p, so a state can be resampled
// onto the nodes of another level's frame for inner products.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlen/core/error.hpp"
#include "minlen/dirac/frame.hpp"
#include "minlen/dirac/linalg.hpp"
#include "minlen/dirac/spectrum.hpp"

namespace minlen::dirac {

struct GridSpec {
  /// Interior nodes; odd so that q = 0 is a node.
  std::size_t size = 1025;
  /// Level whose frame defines the nodes; the state's own level when empty.
  std::optional<int> frame_level;
  /// Box half-width is sized for this many levels (see Frame::box_half_width).
  int box_levels = 10;
  /// Derivative-error level above which ladder_apply records a warning.
  double derivative_tol = 1e-6;

  void validate() const {
    if (size < 65 || size % 2 == 0) throw std::invalid_argument("grid size must be odd and at least 65");
    if (frame_level && *frame_level < 0) throw quantum_number_error("frame level must be nonnegative");
    if (box_levels < 0) throw std::invalid_argument("box_levels must be nonnegative");
  }
};

struct WavefunctionMeta {
  /// ||B+ psi2 - (p0 - 1) psi1|| and ||B- psi1 - (p0 + 1) psi2|| for the normalised spinor,
  /// measured in the own frame before any resampling.
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  /// Discrete eigenvalue used for psi1 (NaN for the closed-form ground state).
  double discrete_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  int node_count = 0;
  double derivative_error = 0.0;
  /// Interpolation error bound when the state was moved to a foreign frame.
  double resample_error = 0.0;
  std::vector<std::string> warnings;
};

struct WavefunctionGrid {
  SpectrumLevel level;
  double beta_tilde = 0.0;
  double omega_tilde = 0.0;
  /// c0 of the frame that defines the nodes, and of the state's own level.
  double frame_c0 = 1.0;
  double own_c0 = 1.0;
  double half_width = 0.0;
  double spacing = 0.0;
  std::vector<double> q;
  std::vector<double> p;
  std::vector<double> psi1;
  std::vector<double> psi2;
  /// Own-level f(p) = c0 + beta~ p^2.
  std::vector<double> f;
  /// Quadrature weights for the integral of dp / f (own f): h f_frame / f_own.
  std::vector<double> weight;
  WavefunctionMeta meta;

  std::size_t size() const { return q.size(); }
  Frame frame() const { return Frame(beta_tilde, frame_c0); }
  Frame own_frame() const { return Frame(beta_tilde, own_c0); }

  /// Sum of weight (|psi1|^2 + |psi2|^2).
  double norm_squared() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weight[i] * (psi1[i] * psi1[i] + psi2[i] * psi2[i]);
    return s;
  }

  void normalize() {
    const double n = std::sqrt(norm_squared());
    if (!(n > 0.0)) throw std::domain_error("cannot normalise a zero state");
    for (auto& v : psi1) v /= n;
    for (auto& v : psi2) v /= n;
  }
};

namespace detail {

inline constexpr std::array<double, 5> kD1Order8{0.0, 4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
inline constexpr std::array<double, 4> kD1Order6{0.0, 3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
inline constexpr std::array<double, 5> kD2Order8{-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0,
                                                 -1.0 / 560.0};

/// Central first derivative with zero extension past the box edge.
template <std::size_t M>
std::vector<double> first_derivative(const std::vector<double>& v, double h,
                                     const std::array<double, M>& c) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  std::vector<double> d(v.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::ptrdiff_t r = 1; r < static_cast<std::ptrdiff_t>(M); ++r) {
      const double right = i + r < n ? v[i + r] : 0.0;
      const double left = i - r >= 0 ? v[i - r] : 0.0;
      s += c[r] * (right - left);
    }
    d[i] = s / h;
  }
  return d;
}

inline double l2(const std::vector<double>& v, double h) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s * h);
}

inline WavefunctionGrid empty_grid(const DOParams& params, const SpectrumLevel& level, const Frame& frame,
                                   double own_c0, double half_width, std::size_t size) {
  WavefunctionGrid g;
  g.level = level;
  g.beta_tilde = params.beta_tilde;
  g.omega_tilde = params.omega_tilde;
  g.frame_c0 = frame.c0();
  g.own_c0 = own_c0;
  const UniformGrid grid{half_width, size};
  g.half_width = half_width;
  g.spacing = grid.spacing();
  g.q = grid.nodes();
  g.p.resize(size);
  g.f.resize(size);
  g.weight.resize(size);
  const Frame own(params.beta_tilde, own_c0);
  for (std::size_t i = 0; i < size; ++i) {
    g.p[i] = frame.p(g.q[i]);
    g.f[i] = own.f(g.p[i]);
    g.weight[i] = g.spacing * frame.f(g.p[i]) / g.f[i];
  }
  g.psi1.assign(size, 0.0);
  g.psi2.assign(size, 0.0);
  return g;
}

/// Lagrange interpolation through `points` consecutive samples around x (in units of the
/// spacing, node index space), treating samples outside [0, n) as zero.
inline double lagrange(const std::vector<double>& v, double x, int points) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  const auto first = static_cast<std::ptrdiff_t>(std::floor(x)) - points / 2 + 1;
  double s = 0.0;
  for (int a = 0; a < points; ++a) {
    const std::ptrdiff_t ia = first + a;
    const double va = ia >= 0 && ia < n ? v[ia] : 0.0;
    if (va == 0.0) continue;
    double w = 1.0;
    for (int b = 0; b < points; ++b)
      if (b != a) w *= (x - double(first + b)) / double(a - b);
    s += w * va;
  }
  return s;
}

}  // namespace detail

struct LadderResult {
  std::vector<double> values;
  /// max |D8 - D6| omega~ f_own / f_frame over the grid, relative to the largest of the
  /// two terms p v and omega~ f dv/dp (the result itself vanishes on the ground state).
  double derivative_error = 0.0;
  std::vector<std::string> warnings;
};

/// B+- = p -+ omega~ f d/dp = p -+ omega~ (f_own / f_frame) d/dq, applied to samples on the
/// grid nodes. `sign` is +1 for B+ and -1 for B-.
inline LadderResult ladder_apply(int sign, const WavefunctionGrid& grid, const std::vector<double>& values,
                                 double derivative_tol = 1e-6) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (values.size() != grid.size()) throw std::invalid_argument("values do not match the grid");
  const auto d8 = detail::first_derivative(values, grid.spacing, detail::kD1Order8);
  const auto d6 = detail::first_derivative(values, grid.spacing, detail::kD1Order6);
  const Frame frame = grid.frame();
  LadderResult out;
  out.values.resize(values.size());
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double jac = grid.omega_tilde * grid.f[i] / frame.f(grid.p[i]);
    out.values[i] = grid.p[i] * values[i] - sign * jac * d8[i];
    err = std::max(err, jac * std::abs(d8[i] - d6[i]));
    scale = std::max({scale, std::abs(grid.p[i] * values[i]), jac * std::abs(d8[i])});
  }
  out.derivative_error = scale > 0.0 ? err / scale : err;
  if (out.derivative_error > derivative_tol)
    out.warnings.push_back("grid too coarse: estimated derivative error " + std::to_string(out.derivative_error));
  return out;
}

/// Evaluates `state` at the nodes of another frame (same beta~, omega~) by 8-point Lagrange
/// interpolation in the state's frame coordinate; the 8- vs 6-point difference is kept as
/// the resample error.
inline WavefunctionGrid resample(const WavefunctionGrid& state, const Frame& target, double half_width,
                                 std::size_t size) {
  if (target.beta_tilde() != state.beta_tilde) throw std::invalid_argument("resample: beta~ differs");
  const DOParams params(state.beta_tilde, state.omega_tilde);
  WavefunctionGrid out = detail::empty_grid(params, state.level, target, state.own_c0, half_width, size);
  out.meta = state.meta;
  const Frame source = state.frame();
  double err = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double qs = source.q(out.p[i]);
    if (std::abs(qs) >= state.half_width) continue;
    // Index space of the source grid: node k sits at -L + (k + 1) h.
    const double x = (qs + state.half_width) / state.spacing - 1.0;
    for (int c = 0; c < 2; ++c) {
      const auto& src = c == 0 ? state.psi1 : state.psi2;
      const double v8 = detail::lagrange(src, x, 8);
      const double v6 = detail::lagrange(src, x, 6);
      (c == 0 ? out.psi1 : out.psi2)[i] = v8;
      err = std::max(err, std::abs(v8 - v6));
    }
  }
  out.meta.resample_error = std::max(state.meta.resample_error, err);
  return out;
}

namespace detail {

inline void record_residuals(WavefunctionGrid& g) {
  const double p0 = g.level.p0_tilde;
  const auto bp = ladder_apply(+1, g, g.psi2);
  const auto bm = ladder_apply(-1, g, g.psi1);
  std::vector<double> r_plus(g.size()), r_minus(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    r_plus[i] = bp.values[i] - (p0 - 1.0) * g.psi1[i];
    r_minus[i] = bm.values[i] - (p0 + 1.0) * g.psi2[i];
  }
  g.meta.residual_plus = l2(r_plus, g.spacing);
  g.meta.residual_minus = l2(r_minus, g.spacing);
  g.meta.derivative_error = std::max(bp.derivative_error, bm.derivative_error);
  for (const auto* w : {&bp.warnings, &bm.warnings})
    g.meta.warnings.insert(g.meta.warnings.end(), w->begin(), w->end());
}

inline int count_nodes(const std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  int nodes = 0, last = 0;
  for (double x : v) {
    if (std::abs(x) < 1e-8 * peak) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

inline WavefunctionGrid finish(WavefunctionGrid own, const DOParams& params, const GridSpec& spec) {
  if (!spec.frame_level) return own;
  const Frame target = Frame::at_level(params, *spec.frame_level);
  if (target.c0() == own.own_c0) return own;
  return resample(own, target, target.box_half_width(params.omega_tilde, spec.box_levels), spec.size);
}

}  // namespace detail

/// Closed-form solution of B- psi1 = 0: psi1 = N f^(-1/(2 beta~ omega~)), or
/// N exp(-p^2 / (2 omega~)) when beta~ = 0; psi2 = 0.
inline WavefunctionGrid ground_state(const DOParams& params, double p0_tilde, const GridSpec& spec = {}) {
  params.require_physical("ground_state");
  spec.validate();
  const Frame own = Frame::at_p0(params, p0_tilde);
  SpectrumLevel level;
  level.qn = {0, 1};
  level.p0_tilde = p0_tilde;
  level.E_over_mc2 = p0_tilde;
  if (params.units) level.E = p0_tilde * params.units->rest_energy();

  const double half_width = own.box_half_width(params.omega_tilde, spec.box_levels);
  WavefunctionGrid g = detail::empty_grid(params, level, own, own.c0(), half_width, spec.size);
  const double bw = params.beta_tilde * params.omega_tilde;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double p = g.p[i];
    g.psi1[i] = params.beta_tilde == 0.0 ? std::exp(-p * p / (2.0 * params.omega_tilde))
                                         : std::exp(-std::log(g.f[i] / own.c0()) / (2.0 * bw));
  }
  g.normalize();
  detail::record_residuals(g);
  return detail::finish(std::move(g), params, spec);
}

/// Spinor of level (n, tau), normalised under the own-level weight 1/f.
inline WavefunctionGrid wavefunction(const DOParams& params, const QuantumNumber& qn, const GridSpec& spec = {}) {
  qn.validate();
  params.require_physical("wavefunction");
  spec.validate();
  const SpectrumLevel level = spectrum_level(params, qn);
  if (qn.n == 0) {
    WavefunctionGrid g = ground_state(params, level.p0_tilde, spec);
    g.level = level;
    return g;
  }

  const Frame own = Frame::at_level(params, qn.n);
  const double half_width = own.box_half_width(params.omega_tilde, spec.box_levels);
  WavefunctionGrid g = detail::empty_grid(params, level, own, own.c0(), half_width, spec.size);
  const double h = g.spacing;
  const double w2 = params.omega_tilde * params.omega_tilde / (h * h);

  linalg::SymmetricBand band(spec.size, 4);
  for (std::size_t i = 0; i < spec.size; ++i) {
    band.at(i, i) = -w2 * detail::kD2Order8[0] + g.p[i] * g.p[i] - params.omega_tilde * g.f[i];
    for (std::size_t r = 1; r <= 4 && i + r < spec.size; ++r) band.at(i + r, i) = -w2 * detail::kD2Order8[r];
  }
  const auto lowest = linalg::lowest_eigenvalues(band, static_cast<std::size_t>(qn.n) + 1);
  if (lowest.size() <= static_cast<std::size_t>(qn.n))
    throw convergence_error("wavefunction: eigenvalue " + std::to_string(qn.n) + " not found");
  g.meta.discrete_eigenvalue = lowest[qn.n];
  const auto v = linalg::inverse_iteration(band, g.meta.discrete_eigenvalue);

  const std::size_t mid = spec.size / 2;
  double sign = qn.n % 2 == 0 ? v[mid] : v[mid + 1] - v[mid - 1];
  sign = sign < 0.0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < spec.size; ++i) g.psi1[i] = sign * v[i];

  g.meta.node_count = detail::count_nodes(g.psi1);
  if (g.meta.node_count != qn.n)
    g.meta.warnings.push_back("node count " + std::to_string(g.meta.node_count) + " differs from n = " +
                              std::to_string(qn.n));
  const double tolerance = 1e-6 * std::max(1.0, std::abs(level.e_n));
  if (std::abs(g.meta.discrete_eigenvalue - level.e_n) > tolerance)
    g.meta.warnings.push_back("discrete eigenvalue " + std::to_string(g.meta.discrete_eigenvalue) +
                              " differs from e_n = " + std::to_string(level.e_n));

  const auto bm = ladder_apply(-1, g, g.psi1, spec.derivative_tol);
  for (std::size_t i = 0; i < spec.size; ++i) g.psi2[i] = bm.values[i] / (level.p0_tilde + 1.0);
  g.normalize();
  detail::record_residuals(g);
  return detail::finish(std::move(g), params, spec);
}

struct InnerProduct {
  std::complex<double> value;
  /// |I_h - I_2h| + resample errors + the worst-case rounding bound N eps sum |terms|.
  double error_estimate = 0.0;
};

/// sum_c conj(psi_c^a) psi_c^b / f_w integrated over p, with f_w the f of level
/// `weight_level`. Both states must sit on the same nodes.
inline InnerProduct inner_product_with_error(const WavefunctionGrid& a, const WavefunctionGrid& b,
                                             const QuantumNumber& weight_level) {
  weight_level.validate();
  if (a.size() != b.size() || a.beta_tilde != b.beta_tilde || a.omega_tilde != b.omega_tilde ||
      a.frame_c0 != b.frame_c0 || a.half_width != b.half_width)
    throw std::invalid_argument("inner_product: states are on incompatible grids");
  const DOParams params(a.beta_tilde, a.omega_tilde);
  const double cw = params.beta_tilde == 0.0 ? 1.0 : level_c0(params, weight_level.n);
  if (!(cw > 0.0)) throw acceptability_error("inner_product: weight level has c0 <= 0");
  const Frame frame = a.frame();
  double fine = 0.0, coarse = 0.0, magnitude = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = a.spacing * frame.f(a.p[i]) / (cw + params.beta_tilde * a.p[i] * a.p[i]);
    const double term = w * (a.psi1[i] * b.psi1[i] + a.psi2[i] * b.psi2[i]);
    fine += term;
    magnitude += std::abs(term);
    if (i % 2 == 1) coarse += 2.0 * term;
  }
  InnerProduct out;
  out.value = {fine, 0.0};
  out.error_estimate = std::abs(fine - coarse) + a.meta.resample_error + b.meta.resample_error +
                       double(a.size()) * std::numeric_limits<double>::epsilon() * magnitude;
  return out;
}

inline std::complex<double> inner_product(const WavefunctionGrid& a, const WavefunctionGrid& b,
                                          const QuantumNumber& weight_level) {
  return inner_product_with_error(a, b, weight_level).value;
}

}  // namespace minlen::dirac
