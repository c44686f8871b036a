#pragma once

// Discretised SUSY pair H = B+B-, H' = B-B+ at fixed p0, used as an independent check of
// the closed-form e_n.
//
// Staggered central differences on the flat coordinate q: psi1 lives on the N + 1 cell
// midpoints, psi2 on the N interior nodes (zero on the box edge). B+ maps nodes to
// midpoints,
//   (B+ psi2)_j = p(m_j) (psi2_j + psi2_{j+1}) / 2 - omega~ (psi2_{j+1} - psi2_j) / h,
// and B- is its transpose. H = B+ (B+)^T and H' = (B+)^T B+ are symmetric tridiagonal,
// second-order accurate, and share their nonzero spectrum exactly; H keeps an exact zero
// mode (B- is N x (N+1)) while B+ is injective, so H' has none. The same blocks give the
// staggered Dirac operator [[1, B+], [B-, -1]], also tridiagonal after interleaving.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "minlen/core/error.hpp"
#include "minlen/dirac/frame.hpp"
#include "minlen/dirac/linalg.hpp"

namespace minlen::dirac {

/// Nonzero entries of B+ restricted to the grid: row j has a_j at node j (j >= 1) and b_j
/// at node j + 1 (j + 1 <= N); nodes are numbered 1..N.
struct StaggeredLadder {
  std::vector<double> a;  // size N + 1, a[0] unused
  std::vector<double> b;  // size N + 1, b[N] unused
  std::size_t nodes = 0;

  StaggeredLadder(const Frame& frame, double omega_tilde, const UniformGrid& grid) : nodes(grid.size) {
    const double h = grid.spacing();
    a.assign(nodes + 1, 0.0);
    b.assign(nodes + 1, 0.0);
    for (std::size_t j = 0; j <= nodes; ++j) {
      const double pm = frame.p(grid.midpoint(j));
      a[j] = j >= 1 ? 0.5 * pm + omega_tilde / h : 0.0;
      b[j] = j + 1 <= nodes ? 0.5 * pm - omega_tilde / h : 0.0;
    }
  }

  /// B+B- on the N + 1 midpoints.
  linalg::Tridiagonal hamiltonian() const {
    linalg::Tridiagonal t;
    t.diag.resize(nodes + 1);
    t.off.resize(nodes);
    for (std::size_t j = 0; j <= nodes; ++j) t.diag[j] = a[j] * a[j] + b[j] * b[j];
    for (std::size_t j = 0; j < nodes; ++j) t.off[j] = b[j] * a[j + 1];
    return t;
  }

  /// B-B+ on the N interior nodes.
  linalg::Tridiagonal partner() const {
    linalg::Tridiagonal t;
    t.diag.resize(nodes);
    t.off.resize(nodes > 0 ? nodes - 1 : 0);
    for (std::size_t i = 1; i <= nodes; ++i) t.diag[i - 1] = a[i] * a[i] + b[i - 1] * b[i - 1];
    for (std::size_t i = 1; i < nodes; ++i) t.off[i - 1] = a[i] * b[i];
    return t;
  }

  /// [[1, B+], [B-, -1]] with unknowns ordered m_0, n_1, m_1, n_2, ..., n_N, m_N.
  linalg::Tridiagonal dirac_operator() const {
    linalg::Tridiagonal t;
    const std::size_t size = 2 * nodes + 1;
    t.diag.resize(size);
    t.off.resize(size - 1);
    for (std::size_t k = 0; k < size; ++k) t.diag[k] = k % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j <= nodes; ++j) {
      if (j >= 1) t.off[2 * j - 1] = a[j];  // node j (position 2j-1) with midpoint j (2j)
      if (j + 1 <= nodes) t.off[2 * j] = b[j];  // midpoint j (2j) with node j+1 (2j+1)
    }
    return t;
  }
};

enum class FactorOrder { plus_minus, minus_plus };

struct EigenOptions {
  /// Interior nodes of the coarsest grid; each refinement maps N -> 2N + 1.
  std::size_t base_size = 255;
  /// Number of grids beyond the coarsest. Two refinements give the observed order of the
  /// raw scheme, three also give the observed order of the extrapolated values.
  int refinements = 3;
  FactorOrder order = FactorOrder::plus_minus;
  /// Largest admissible change of the extrapolated eigenvalues between the last two
  /// Richardson estimates, relative to max(1, |e|).
  double convergence_tol = 1e-4;
};

struct EigenResult {
  /// Richardson-extrapolated eigenvalues (finest pair), ascending.
  std::vector<double> eigenvalues;
  /// Raw eigenvalues per grid, coarsest first.
  std::vector<std::vector<double>> per_grid;
  std::vector<std::size_t> grid_sizes;
  /// log2 of successive difference ratios of the raw eigenvalues (finest three grids);
  /// NaN where a difference vanishes.
  std::vector<double> observed_order;
  /// Same ratio for the Richardson-extrapolated sequence (needs four grids).
  std::vector<double> extrapolated_order;
  double half_width = 0.0;
  std::string log;
};

/// Lowest `count` eigenvalues of B+B- (or B-B+) at fixed p0, in the flat frame, with
/// Richardson extrapolation across grid refinements.
inline EigenResult eigensolve_factorized(const DOParams& params, double p0_tilde, std::size_t count,
                                         const EigenOptions& options = {}) {
  params.require_physical("eigensolve_factorized");
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (options.refinements < 1) throw std::invalid_argument("at least one refinement is needed");
  const Frame frame = Frame::at_p0(params, p0_tilde);
  UniformGrid grid{frame.box_half_width(params.omega_tilde, int(count)), options.base_size};

  EigenResult result;
  result.half_width = grid.half_width;
  std::ostringstream log;
  for (int level = 0; level <= options.refinements; ++level) {
    StaggeredLadder ladder(frame, params.omega_tilde, grid);
    auto t = options.order == FactorOrder::plus_minus ? ladder.hamiltonian() : ladder.partner();
    auto w = linalg::lowest_eigenvalues(std::move(t), count);
    if (options.order == FactorOrder::plus_minus && !w.empty()) w[0] = std::max(w[0], 0.0);
    log << "N=" << grid.size << " h=" << grid.spacing();
    for (double v : w) log << " " << v;
    log << "\n";
    result.per_grid.push_back(std::move(w));
    result.grid_sizes.push_back(grid.size);
    grid = grid.refined();
  }

  const std::size_t levels = result.per_grid.size();
  auto richardson = [&](std::size_t fine, std::size_t k) {
    return (4.0 * result.per_grid[fine][k] - result.per_grid[fine - 1][k]) / 3.0;
  };
  result.eigenvalues.resize(count);
  result.observed_order.assign(count, std::nan(""));
  result.extrapolated_order.assign(count, std::nan(""));
  auto order_of = [](double coarse, double mid, double fine) {
    const double d1 = mid - coarse, d2 = fine - mid;
    return d1 != 0.0 && d2 != 0.0 ? std::log2(std::abs(d1 / d2)) : std::nan("");
  };
  for (std::size_t k = 0; k < count; ++k) {
    result.eigenvalues[k] = richardson(levels - 1, k);
    if (levels >= 3) {
      result.observed_order[k] = order_of(result.per_grid[levels - 3][k], result.per_grid[levels - 2][k],
                                          result.per_grid[levels - 1][k]);
      if (levels >= 4)
        result.extrapolated_order[k] =
            order_of(richardson(levels - 3, k), richardson(levels - 2, k), richardson(levels - 1, k));
      const double prev = richardson(levels - 2, k);
      const double scale = std::max(1.0, std::abs(result.eigenvalues[k]));
      if (std::abs(result.eigenvalues[k] - prev) > options.convergence_tol * scale) {
        log << "eigenvalue " << k << " not converged: " << prev << " -> " << result.eigenvalues[k] << "\n";
        result.log = log.str();
        throw convergence_error("eigensolve_factorized did not converge under refinement\n" + result.log);
      }
    }
  }
  result.log = log.str();
  return result;
}

/// Distance from `target` to the nearest eigenvalue of the staggered Dirac operator built
/// at p0 = target; zero (to discretisation accuracy) iff a normalisable solution with that
/// energy exists.
struct DiracFloor {
  double target = 0.0;
  std::vector<std::size_t> grid_sizes;
  /// min_k |lambda_k - target| per grid.
  std::vector<double> floor;

  bool solution_found(double threshold) const {
    for (double f : floor)
      if (f > threshold) return false;
    return true;
  }
};

inline DiracFloor dirac_eigen_floor(const DOParams& params, double p0_tilde, std::size_t base_size = 255,
                                    int refinements = 1, int box_levels = 8) {
  params.require_physical("dirac_eigen_floor");
  const Frame frame = Frame::at_p0(params, p0_tilde);
  UniformGrid grid{frame.box_half_width(params.omega_tilde, box_levels), base_size};
  DiracFloor out;
  out.target = p0_tilde;
  for (int level = 0; level <= refinements; ++level) {
    StaggeredLadder ladder(frame, params.omega_tilde, grid);
    const auto w = linalg::all_eigenvalues(ladder.dirac_operator());
    double best = std::numeric_limits<double>::infinity();
    for (double v : w) best = std::min(best, std::abs(v - p0_tilde));
    out.grid_sizes.push_back(grid.size);
    out.floor.push_back(best);
    grid = grid.refined();
  }
  return out;
}

}  // namespace minlen::dirac
