#pragma once

// Momentum-representation builders for the deformed position/momentum operators and the
// deformed Poincare generators.

#include "minlen/symbolic/operator.hpp"

namespace minlen::sym {

/// P^mu = p^mu.
inline Operator build_momentum(const Ring& ring, int mu) { return Operator::multiply(ring.p(mu)); }

inline Operator build_momentum_lower(const Ring& ring, int mu) {
  return Operator::multiply(ring.p_lower(mu));
}

/// x^mu = -h g^{mu nu} d/dp^nu.
inline Operator build_coordinate(const Ring& ring, int mu) {
  const auto& g = ring.metric();
  return Operator::term(unit_index(g.slot_of(mu)),
                        ring.h() * Rational(-g.sign(mu)));
}

/// x_mu = -h d/dp^mu.
inline Operator build_coordinate_lower(const Ring& ring, int mu) {
  return scale(Rational(ring.metric().sign(mu)), build_coordinate(ring, mu));
}

/// X^mu = (1 - beta s) x^mu - beta' p^mu p_nu x^nu + h gamma p^mu.
inline Operator build_position(const Ring& ring, int mu) {
  Operator contraction;  // p_nu x^nu
  for (int nu : ring.metric().labels())
    contraction += scale(ring, ring.p_lower(nu), build_coordinate(ring, nu));
  Operator x = scale(ring, ring.one_minus_beta_s(), build_coordinate(ring, mu));
  x -= scale(ring, ring.mul(ring.beta_prime(), ring.p(mu)), contraction);
  x += Operator::multiply(ring.mul(ring.h(), ring.mul(ring.gamma(), ring.p(mu))));
  return x;
}

inline Operator build_position_lower(const Ring& ring, int mu) {
  return scale(Rational(ring.metric().sign(mu)), build_position(ring, mu));
}

/// L_{ab} = u o (X_a P_b - X_b P_a).
inline Operator build_lorentz_generator(const Ring& ring, int a, int b, bool with_u = true) {
  Operator body = compose(ring, build_position_lower(ring, a), build_momentum_lower(ring, b)) -
                  compose(ring, build_position_lower(ring, b), build_momentum_lower(ring, a));
  return with_u ? scale(ring, ring.u(), body) : body;
}

/// Undeformed angular momentum x_a p_b - x_b p_a.
inline Operator build_undeformed_lorentz_generator(const Ring& ring, int a, int b) {
  return compose(ring, build_coordinate_lower(ring, a), build_momentum_lower(ring, b)) -
         compose(ring, build_coordinate_lower(ring, b), build_momentum_lower(ring, a));
}

/// P^_a = u p_a.
inline Operator build_translation_generator(const Ring& ring, int a, bool with_u = true) {
  return Operator::multiply(with_u ? ring.mul(ring.u(), ring.p_lower(a)) : ring.p_lower(a));
}

/// Euclidean representation written directly in its original form:
/// X^i = (1 + beta p^2) x^i + beta' p^i (p . x) + h gamma p^i, x^i = h d/dp^i.
/// Requires a Euclidean ring.
inline Operator build_euclidean_position(const Ring& ring, int i) {
  const auto& g = ring.metric();
  if (!g.is_euclidean()) throw dimension_error("Euclidean builder needs a Euclidean metric");
  auto x = [&](int j) { return Operator::term(unit_index(g.slot_of(j)), ring.h()); };
  Poly p2;
  Operator p_dot_x;
  for (int j : g.labels()) {
    p2 += ring.p(j) * ring.p(j);
    p_dot_x += scale(ring, ring.p(j), x(j));
  }
  Operator out = scale(ring, ring.reduce(ring.one() + ring.beta() * p2), x(i));
  out += scale(ring, ring.mul(ring.beta_prime(), ring.p(i)), p_dot_x);
  out += Operator::multiply(ring.mul(ring.h(), ring.mul(ring.gamma(), ring.p(i))));
  return out;
}

}  // namespace minlen::sym
