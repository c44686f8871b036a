#include <gtest/gtest.h>

#include "minlen/symbolic/builders.hpp"

using namespace minlen::sym;

TEST(Poly, ArithmeticAndCancellation) {
  Poly a = Poly::variable(0) + Poly::constant(2);
  Poly b = Poly::variable(0) - Poly::constant(2);
  Poly prod = a * b;
  EXPECT_EQ(prod.terms().size(), 2u);
  EXPECT_TRUE((prod - Poly::variable(0, 2) + Poly::constant(4)).is_zero());
}

TEST(Poly, EpsIsNilpotent) {
  Poly e = Poly::symbol(Symbol::eps);
  EXPECT_TRUE((e * e).is_zero());
  Poly x = Poly::variable(1) + e * Poly::variable(2);
  Poly sq = x * x;
  EXPECT_EQ(sq.eps_part(0).to_string(), (Poly::variable(1) * Poly::variable(1)).to_string());
  EXPECT_TRUE((sq.eps_part(1) - Poly::variable(1) * Poly::variable(2) * Rational(2)).is_zero());
}

TEST(Ring, UInvertsOneMinusBetaS) {
  for (const auto& params : {SymbolicParams::symbolic(), SymbolicParams{Rational(1, 3), {}, {}},
                             SymbolicParams::undeformed()}) {
    Ring ring(Metric::minkowski(2), params);
    EXPECT_TRUE((ring.mul(ring.u(), ring.one_minus_beta_s()) - ring.one()).is_zero());
  }
}

TEST(Ring, ReductionIsCanonical) {
  Ring ring(Metric::minkowski(1), SymbolicParams::symbolic());
  // u * beta * (p^0)^2 must never survive reduction.
  Poly raw = Poly::symbol(Symbol::u) * ring.beta() * ring.p(0) * ring.p(0) * ring.p(1);
  Poly r = ring.reduce(raw);
  for (const auto& [m, c] : r.terms())
    EXPECT_FALSE(m[slot(Symbol::u)] > 0 && m[slot(Symbol::beta)] > 0 && m[0] >= 2) << r.to_string();
  // Same value at a point.
  std::vector<Rational> p{Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(ring.evaluate(raw, p, 1, Rational(1, 5), 0, 0), ring.evaluate(r, p, 1, Rational(1, 5), 0, 0));
}

TEST(Ring, DerivativeOfUMatchesFiniteDifference) {
  Ring ring(Metric::minkowski(2), SymbolicParams::symbolic());
  const double beta = 0.3;
  std::vector<double> p{0.7, 0.4, -0.2};
  auto u_at = [&](const std::vector<double>& q) {
    return 1.0 / (1.0 - beta * (q[0] * q[0] - q[1] * q[1] - q[2] * q[2]));
  };
  for (int mu = 0; mu < 3; ++mu) {
    Poly du = ring.derivative(ring.u(), mu);
    std::vector<Rational> pr;
    for (double x : p) pr.emplace_back(x);
    const double exact = static_cast<double>(ring.evaluate(du, pr, 1, Rational(beta), 0, 0));
    const double step = 1e-5;
    auto hi = p, lo = p;
    hi[mu] += step;
    lo[mu] -= step;
    EXPECT_NEAR(exact, (u_at(hi) - u_at(lo)) / (2 * step), 1e-8);
  }
}

TEST(Ring, EuclideanMetricIsAllMinus) {
  Ring ring(Metric::euclidean(3), SymbolicParams::symbolic());
  EXPECT_EQ(ring.metric().labels(), (std::vector<int>{1, 2, 3}));
  // 1 - beta s = 1 + beta P^2
  Poly p2 = ring.p(1) * ring.p(1) + ring.p(2) * ring.p(2) + ring.p(3) * ring.p(3);
  EXPECT_TRUE((ring.one_minus_beta_s() - ring.one() - ring.beta() * p2).is_zero());
}

TEST(Operator, LeibnizComposition) {
  Ring ring(Metric::minkowski(1), SymbolicParams::undeformed());
  Operator d0 = Operator::derivative(ring.metric().slot_of(0));
  Operator p0 = Operator::multiply(ring.p(0));
  // [d/dp, p] = 1
  Operator c = commutator(ring, d0, p0);
  EXPECT_EQ(c.term_count(), 1u);
  EXPECT_TRUE((c - Operator::multiply(ring.one())).is_zero());
}

TEST(Operator, ApplyToPolynomial) {
  Ring ring(Metric::minkowski(1), SymbolicParams::undeformed());
  // x^0 = -h d/dp^0 acting on (p^0)^3
  Poly out = apply(ring, build_coordinate(ring, 0), ring.p(0) * ring.p(0) * ring.p(0));
  EXPECT_TRUE((out + ring.h() * ring.p(0) * ring.p(0) * Rational(3)).is_zero());
}
