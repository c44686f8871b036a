#pragma once

// Uncertainty bounds of the deformed algebra.
//
// For a pair (X^i, P^i) Robertson's inequality with the [X, P] commutator gives
//   dX^i dP^i >= (hbar/2) |1 - beta {<(P^0)^2> - sum_j [(dP^j)^2 + <P^j>^2]} + beta' [(dP^i)^2 + <P^i>^2]|.
// With all dP^j equal to dP, the right-hand side divided by dP is
//   (hbar / (2 dP)) (A + (D beta + beta') dP^2),  A = 1 - beta [<(P^0)^2> - sum_j <P^j>^2] + beta' <P^i>^2,
// which for A > 0 is smallest at dP^2 = A / (D beta + beta'), where it equals
// hbar sqrt((D beta + beta') A). See docs/uncertainty.md.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minlen/core/error.hpp"
#include "minlen/core/kinematics.hpp"

namespace minlen::uncertainty {

template <class T>
T magnitude(const T& x) {
  return x < T{0} ? -x : x;
}

/// First and second momentum moments of a state; spatial index i = 1..D maps to entry i-1.
template <class T = double>
struct MomentSet {
  int D = 1;
  std::vector<T> mean_P;
  std::vector<T> spread_P;
  T meansq_P0{0};

  MomentSet() = default;
  MomentSet(int dims, std::vector<T> mean, std::vector<T> spread, T meansq0)
      : D(dims), mean_P(std::move(mean)), spread_P(std::move(spread)), meansq_P0(meansq0) {
    validate();
  }

  /// Zero means, equal spreads.
  static MomentSet isotropic_at_rest(int dims, T spread, T meansq0) {
    return MomentSet(dims, std::vector<T>(dims, T{0}), std::vector<T>(dims, spread), meansq0);
  }

  void validate() const {
    if (D < 1) throw dimension_error("D must be positive");
    if (mean_P.size() != std::size_t(D) || spread_P.size() != std::size_t(D))
      throw dimension_error("moment vectors must have D entries");
    for (const auto& s : spread_P)
      if (s < T{0}) throw std::invalid_argument("momentum spreads must be nonnegative");
    if (meansq_P0 < T{0}) throw std::invalid_argument("<(P^0)^2> must be nonnegative");
  }

  bool isotropic() const {
    for (const auto& s : spread_P)
      if (!(s == spread_P.front())) return false;
    return true;
  }

  /// <(P^j)^2> = (dP^j)^2 + <P^j>^2.
  T meansq(int j) const {
    check(j);
    return spread_P[j - 1] * spread_P[j - 1] + mean_P[j - 1] * mean_P[j - 1];
  }

  void check(int i) const {
    if (i < 1 || i > D) throw dimension_error("spatial index " + std::to_string(i) + " outside 1.." + std::to_string(D));
  }
};

/// (hbar/2) (1/dP + beta dP).
template <class T>
T gup_bound(const T& deltaP, const T& beta, const T& hbar) {
  if (!(deltaP > T{0})) throw std::domain_error("gup_bound: deltaP must be positive");
  return hbar / T{2} * (T{1} / deltaP + beta * deltaP);
}

/// Location and value of the gup_bound minimum: (1/sqrt(beta), hbar sqrt(beta)).
inline std::pair<double, double> gup_minimum(double beta, double hbar) {
  if (!(beta > 0.0)) throw std::domain_error("gup_minimum: beta must be positive");
  return {1.0 / std::sqrt(beta), hbar * std::sqrt(beta)};
}

/// Right-hand side of dX^i dP^i >= ..., long form.
template <class T>
T ur_bound(const MomentSet<T>& m, const DeformationParams<T>& params, int i, const T& hbar) {
  m.check(i);
  T spatial{0};
  for (int j = 1; j <= m.D; ++j)
    spatial += m.spread_P[j - 1] * m.spread_P[j - 1] + m.mean_P[j - 1] * m.mean_P[j - 1];
  const T own = m.spread_P[i - 1] * m.spread_P[i - 1] + m.mean_P[i - 1] * m.mean_P[i - 1];
  return hbar / T{2} * magnitude(T{1} - params.beta * (m.meansq_P0 - spatial) + params.beta_prime * own);
}

/// (hbar/2) |1 - beta <P_rho P^rho> + beta' <(P^i)^2>|.
template <class T>
T ur_bound_compact(const T& meansq_invariant, const T& meansq_i, const DeformationParams<T>& params, const T& hbar) {
  return hbar / T{2} * magnitude(T{1} - params.beta * meansq_invariant + params.beta_prime * meansq_i);
}

/// <P_rho P^rho> = <(P^0)^2> - sum_j <(P^j)^2>.
template <class T>
T meansq_invariant(const MomentSet<T>& m) {
  T s = m.meansq_P0;
  for (int j = 1; j <= m.D; ++j) s -= m.meansq(j);
  return s;
}

/// The brace 1 - beta [<(P^0)^2> - sum_j <P^j>^2] + beta' <P^i>^2.
template <class T>
T min_deltaX_brace(const MomentSet<T>& m, const DeformationParams<T>& params, int i) {
  m.check(i);
  T means{0};
  for (const auto& x : m.mean_P) means += x * x;
  return T{1} - params.beta * (m.meansq_P0 - means) + params.beta_prime * m.mean_P[i - 1] * m.mean_P[i - 1];
}

/// hbar sqrt((D beta + beta') A) for an isotropic moment set.
inline double min_deltaX(const MomentSet<double>& m, const DeformationParams<double>& params, int i, double hbar) {
  if (!m.isotropic()) throw std::invalid_argument("min_deltaX needs equal spreads in every direction");
  const double brace = min_deltaX_brace(m, params, i);
  if (!(brace > 0.0))
    throw acceptability_error("min_deltaX: 1 - beta[<(P^0)^2> - sum <P^j>^2] + beta' <P^i>^2 = " +
                              std::to_string(brace) + " is not positive");
  return hbar * std::sqrt((m.D * params.beta + params.beta_prime) * brace);
}

/// hbar sqrt((D beta + beta') (1 - beta <(P^0)^2>)), the minimum at vanishing spatial means.
inline double absolute_min_deltaX(const DeformationParams<double>& params, double meansq_P0, int D, double hbar) {
  if (D < 1) throw dimension_error("D must be positive");
  if (!(params.beta * meansq_P0 < 1.0))
    throw acceptability_error("absolute_min_deltaX: beta <(P^0)^2> must be below 1");
  return hbar * std::sqrt((D * params.beta + params.beta_prime) * (1.0 - params.beta * meansq_P0));
}

}  // namespace minlen::uncertainty
