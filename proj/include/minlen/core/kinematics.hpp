#pragma once

// Shared kinematics for the deformed algebra: spacetime dimension and metric, the
// deformation constants, the Minkowski square, the scalar-product weight exponent and
// the physical-acceptability predicate.
//
// Everything here is templated on the scalar so the same code runs in double precision
// and in exact rational arithmetic.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minlen/core/error.hpp"

namespace minlen {

/// (D+1)-dimensional spacetime with the fixed diagonal signature (+, -, ..., -).
class Spacetime {
 public:
  explicit Spacetime(int spatial_dims) : dims_(spatial_dims) {
    if (spatial_dims < 1) throw dimension_error("spatial dimension must be positive");
  }

  int spatial_dims() const { return dims_; }
  std::size_t components() const { return static_cast<std::size_t>(dims_) + 1; }

  /// g^{mu mu} = g_{mu mu}; the metric is diagonal and its own inverse.
  int metric(std::size_t mu) const {
    check_index(mu);
    return mu == 0 ? 1 : -1;
  }

  int metric(std::size_t mu, std::size_t nu) const { return mu == nu ? metric(mu) : 0; }

  template <class T>
  std::vector<T> lower(std::span<const T> v) const {
    check_size(v.size());
    std::vector<T> out(v.begin(), v.end());
    for (std::size_t mu = 1; mu < out.size(); ++mu) out[mu] = -out[mu];
    return out;
  }

  /// Same operation as lower(); kept separate so call sites say which way indices move.
  template <class T>
  std::vector<T> raise(std::span<const T> v) const {
    return lower(v);
  }

  void check_size(std::size_t n) const {
    if (n != components())
      throw dimension_error("expected " + std::to_string(components()) + " components, got " +
                            std::to_string(n));
  }

 private:
  void check_index(std::size_t mu) const {
    if (mu >= components()) throw dimension_error("spacetime index out of range");
  }

  int dims_;
};

/// Deformation constants of the algebra, all with dimension of inverse momentum squared.
template <class T = double>
struct DeformationParams {
  T beta{0};
  T beta_prime{0};
  T gamma{0};

  DeformationParams() = default;
  DeformationParams(T b, T bp, T g = T{0}) : beta(b), beta_prime(bp), gamma(g) {
    if (beta < T{0} || beta_prime < T{0})
      throw std::invalid_argument("beta and beta' must be nonnegative");
  }

  T sum() const { return beta + beta_prime; }
};

/// Contravariant momentum p^0..p^D.
template <class T = double>
using MomentumVector = std::vector<T>;

/// p_nu p^nu = (p^0)^2 - sum_i (p^i)^2.
template <class T>
T minkowski_square(std::span<const T> p, const Spacetime& st) {
  st.check_size(p.size());
  T s = p[0] * p[0];
  for (std::size_t i = 1; i < p.size(); ++i) s -= p[i] * p[i];
  return s;
}

template <class T>
T minkowski_square(const MomentumVector<T>& p, const Spacetime& st) {
  return minkowski_square(std::span<const T>(p), st);
}

/// alpha = [2 beta + beta' (D + 2) - 2 gamma] / [2 (beta + beta')], the exponent of the
/// momentum-space scalar-product weight [1 - (beta + beta') p.p]^(-alpha).
template <class T>
T weight_alpha(const DeformationParams<T>& params, const Spacetime& st) {
  if (params.sum() == T{0})
    throw undefined_parameter_error("weight exponent undefined for beta = beta' = 0");
  const T d{st.spatial_dims()};
  return (T{2} * params.beta + params.beta_prime * (d + T{2}) - T{2} * params.gamma) /
         (T{2} * params.sum());
}

/// (beta + beta') (p^0)^2 < 1: the weight has no singularity for any spatial momentum.
template <class T>
bool is_acceptable(const DeformationParams<T>& params, const T& p0) {
  return params.sum() * p0 * p0 < T{1};
}

/// 1 - (beta + beta') p.p, the base of the scalar-product weight.
template <class T>
T weight_base(const DeformationParams<T>& params, const MomentumVector<T>& p, const Spacetime& st) {
  return T{1} - params.sum() * minkowski_square(p, st);
}

}  // namespace minlen
