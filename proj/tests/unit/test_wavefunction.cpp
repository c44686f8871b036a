#include <gtest/gtest.h>

#include <cmath>

#include "minlen/dirac/wavefunction.hpp"
#include "minlen/symbolic/verify.hpp"

using namespace minlen::dirac;

namespace {

std::vector<double> apply_both(int first, int second, const WavefunctionGrid& g, const std::vector<double>& v) {
  return ladder_apply(second, g, ladder_apply(first, g, v).values).values;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(GroundState, UndeformedGaussian) {
  const DOParams p(0.0, 0.1);
  const auto g = ground_state(p, 1.0);
  const std::size_t mid = g.size() / 2;
  for (std::size_t i = 0; i < g.size(); i += 37)
    EXPECT_NEAR(g.psi1[i] / g.psi1[mid], std::exp(-g.p[i] * g.p[i] / 0.2), 1e-12);
  EXPECT_NEAR(g.norm_squared(), 1.0, 1e-12);
  EXPECT_LE(g.meta.residual_minus, 1e-8);
  for (double v : g.psi2) EXPECT_EQ(v, 0.0);
}

TEST(GroundState, DeformedPowerLaw) {
  const DOParams p(0.5, 0.1);
  const auto g = ground_state(p, 1.0);
  const std::size_t mid = g.size() / 2;
  for (std::size_t i = 0; i < g.size(); i += 53) {
    const double closed = std::pow(0.5 + 0.5 * g.p[i] * g.p[i], -10.0) / std::pow(0.5, -10.0);
    EXPECT_NEAR(g.psi1[i] / g.psi1[mid], closed, 1e-12 * std::max(1.0, closed));
  }
  const auto b = ladder_apply(-1, g, g.psi1);
  EXPECT_LE(max_abs(b.values), 1e-7);
  EXPECT_LE(g.meta.residual_minus, 1e-8);
  EXPECT_TRUE(b.warnings.empty());
}

TEST(GroundState, RejectsUnacceptableEnergy) {
  EXPECT_THROW(ground_state(DOParams(0.5, 0.1), 1.5), minlen::acceptability_error);
}

TEST(Ladder, HermiteFunctionsAtZeroDeformation) {
  const DOParams p(0.0, 0.1);
  auto g = ground_state(p, 1.0);
  for (unsigned k = 0; k < 5; ++k) {
    std::vector<double> psi(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.p[i] / std::sqrt(p.omega_tilde);
      psi[i] = std::hermite(k, x) * std::exp(-x * x / 2.0);
    }
    const auto out = apply_both(-1, +1, g, psi);
    const double scale = max_abs(psi);
    for (std::size_t i = 0; i < g.size(); ++i)
      ASSERT_NEAR(out[i], 2.0 * p.omega_tilde * k * psi[i], 1e-8 * scale * (k + 1)) << k << " " << i;
  }
}

TEST(Ladder, CommutatorMatchesSymbolicEngine) {
  using namespace minlen::sym;
  const DOParams p(0.5, 0.1);
  const double p0 = 1.05;
  auto g = ground_state(p, p0);
  // [X^1, P^1] in D = 1 with beta' = gamma = 0; the coefficient of h is 1 - beta s.
  SymbolicParams sp;
  sp.beta_prime = Rational(0);
  sp.gamma = Rational(0);
  const Ring ring(Metric::minkowski(1), sp);
  const Operator c = commutator(ring, build_position(ring, 1), build_momentum(ring, 1));
  ASSERT_EQ(c.terms().size(), 1u);
  const Poly coeff = c.terms().begin()->second;

  std::vector<double> test(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) test[i] = std::exp(-g.q[i] * g.q[i] / 0.5);
  const auto pm = apply_both(-1, +1, g, test);
  const auto mp = apply_both(+1, -1, g, test);
  const std::size_t mid = g.size() / 2;
  for (std::size_t i = mid - 200; i <= mid + 200; i += 20) {
    // B+- = P +- i w X with P = p, so [B+, B-] = 2 i w [X, P] = 2 i w (i c) = -2 w c.
    const Rational value = ring.evaluate(coeff, {Rational(p0), Rational(g.p[i])}, 1, Rational(p.beta_tilde), 0, 0);
    const double expected = -2.0 * p.omega_tilde * static_cast<double>(value) * test[i];
    EXPECT_NEAR(pm[i] - mp[i], expected, 1e-7) << i;
    EXPECT_NEAR(static_cast<double>(value), g.f[i], 1e-12);
  }
}

TEST(Ladder, BadInput) {
  auto g = ground_state(DOParams(0.5, 0.1), 1.0);
  EXPECT_THROW(ladder_apply(2, g, g.psi1), std::invalid_argument);
  EXPECT_THROW(ladder_apply(1, g, std::vector<double>(3)), std::invalid_argument);
}

class Levels : public ::testing::TestWithParam<double> {};

TEST_P(Levels, CoupledEquationsAndNormalization) {
  const DOParams p(GetParam(), 0.1);
  for (int tau : {1, -1})
    for (int n = tau == 1 ? 0 : 1; n <= 5; ++n) {
      const auto g = wavefunction(p, {n, tau});
      EXPECT_LE(g.meta.residual_plus, 1e-6) << n << " " << tau;
      EXPECT_LE(g.meta.residual_minus, 1e-6) << n << " " << tau;
      EXPECT_NEAR(g.norm_squared(), 1.0, 1e-8);
      if (n > 0) {
        EXPECT_EQ(g.meta.node_count, n);
      }
      EXPECT_TRUE(g.meta.warnings.empty()) << g.meta.warnings.front();
      EXPECT_EQ(g.level.qn, (QuantumNumber{n, tau}));
    }
}

INSTANTIATE_TEST_SUITE_P(Deformation, Levels, ::testing::Values(0.0, 0.1, 0.5));

TEST(Wavefunction, UndeformedMatchesHermite) {
  const DOParams p(0.0, 0.1);
  const auto g = wavefunction(p, {3, 1});
  double dot = 0.0, nn = 0.0;
  std::vector<double> h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.p[i] / std::sqrt(p.omega_tilde);
    h[i] = std::hermite(3, x) * std::exp(-x * x / 2.0);
    dot += g.weight[i] * g.psi1[i] * h[i];
    nn += g.weight[i] * h[i] * h[i];
  }
  double s1 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s1 += g.weight[i] * g.psi1[i] * g.psi1[i];
  EXPECT_NEAR(std::abs(dot) / std::sqrt(nn * s1), 1.0, 1e-10);
}

TEST(Wavefunction, RejectsMissingState) {
  EXPECT_THROW(wavefunction(DOParams(0.5, 0.1), {0, -1}), minlen::quantum_number_error);
  EXPECT_THROW(wavefunction(DOParams(1.5, 0.1), {1, 1}), minlen::acceptability_error);
  GridSpec even;
  even.size = 1024;
  EXPECT_THROW(wavefunction(DOParams(0.5, 0.1), {1, 1}, even), std::invalid_argument);
}

TEST(InnerProduct, OwnWeightIsNorm) {
  const DOParams p(0.5, 0.1);
  const auto g = wavefunction(p, {2, 1});
  EXPECT_NEAR(inner_product(g, g, {2, 1}).real(), 1.0, 1e-8);
}

TEST(InnerProduct, ConjugateSymmetric) {
  const DOParams p(0.5, 0.1);
  GridSpec spec;
  spec.frame_level = 0;
  const auto a = wavefunction(p, {0, 1}, spec), b = wavefunction(p, {1, 1}, spec);
  const auto ab = inner_product(a, b, {0, 1}), ba = inner_product(b, a, {0, 1});
  EXPECT_EQ(ab, std::conj(ba));
}

TEST(InnerProduct, UndeformedOrthogonality) {
  const DOParams p(0.0, 0.1);
  GridSpec spec;
  spec.frame_level = 0;
  const auto a = wavefunction(p, {0, 1}, spec), b = wavefunction(p, {2, 1}, spec);
  const auto r = inner_product_with_error(a, b, {0, 1});
  EXPECT_LT(std::abs(r.value), r.error_estimate);
}

TEST(InnerProduct, IncompatibleGrids) {
  const DOParams p(0.5, 0.1);
  const auto a = wavefunction(p, {0, 1}), b = wavefunction(p, {1, 1});
  EXPECT_THROW(inner_product(a, b, {0, 1}), std::invalid_argument);
  GridSpec small;
  small.size = 513;
  EXPECT_THROW(inner_product(a, wavefunction(p, {0, 1}, small), {0, 1}), std::invalid_argument);
}

TEST(Resample, SameFrameIsIdentity) {
  const DOParams p(0.5, 0.1);
  const auto g = wavefunction(p, {1, 1});
  const auto r = resample(g, g.frame(), g.half_width, g.size());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(r.psi1[i], g.psi1[i], 1e-14);
}

TEST(Resample, SharedFramePreservesNorm) {
  const DOParams p(0.5, 0.1);
  GridSpec spec;
  spec.frame_level = 0;
  const auto g = wavefunction(p, {3, 1}, spec);
  EXPECT_NE(g.frame_c0, g.own_c0);
  EXPECT_NEAR(g.norm_squared(), 1.0, 1e-6);
  EXPECT_LT(g.meta.resample_error, 1e-6);
}
