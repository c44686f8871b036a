#include <gtest/gtest.h>

#include <cmath>

#include "minlen/dirac/spectrum.hpp"

using namespace minlen::dirac;

TEST(Spectrum, EFormulaExamples) {
  EXPECT_DOUBLE_EQ(e_formula(DOParams(0.0, 0.5), 3, 1.7), 3.0);
  EXPECT_EQ(e_formula(DOParams(0.5, 0.1), 0, 1.0), 0.0);
  const DOParams p(0.5, 0.1);
  const double p0sq = 1.42 / 1.21;
  EXPECT_NEAR(e_formula(p, 2, std::sqrt(p0sq)), 0.42 * (1.0 - 0.5 * p0sq), 1e-15);
  EXPECT_NEAR(e_formula(p, 2, std::sqrt(p0sq)), p0sq - 1.0, 1e-15);
  EXPECT_THROW(e_formula(p, -1, 1.0), minlen::quantum_number_error);
}

TEST(Spectrum, P0AllowedExamples) {
  EXPECT_EQ(p0_allowed(DOParams(0.7, 0.3), {0, 1}), 1.0);
  for (int n : {1, 5, 40}) EXPECT_NEAR(std::abs(p0_allowed(DOParams(1.0, 0.2, Mode::diagnostic), {n, -1})), 1.0, 1e-15);
  EXPECT_NEAR(p0_allowed(DOParams(0.5, 0.1), {2, 1}), std::sqrt(1.42 / 1.21), 1e-15);
  EXPECT_NEAR(p0_allowed(DOParams(0.5, 0.1), {2, -1}), -std::sqrt(1.42 / 1.21), 1e-15);
}

TEST(Spectrum, ClosedFormsAgree) {
  for (double bt : {0.1, 0.5, 0.9})
    for (int n : {0, 1, 7, 300}) {
      const auto f = p0_closed_forms(DOParams(bt, 0.1), {n, 1});
      EXPECT_NEAR(f.ratio_form, f.bounded_form, 1e-13 * f.ratio_form) << bt << " " << n;
    }
}

TEST(Spectrum, QuantumNumbersRejected) {
  const DOParams p(0.5, 0.1);
  EXPECT_THROW(p0_allowed(p, {0, -1}), minlen::quantum_number_error);
  EXPECT_THROW(p0_allowed(p, {-1, 1}), minlen::quantum_number_error);
  EXPECT_THROW(p0_allowed(p, {2, 0}), minlen::quantum_number_error);
}

TEST(Spectrum, EnergyWithUnits) {
  DimensionalSet u{2.0, 3.0, 0.5, 0.7};
  const double beta = 0.3 / (u.mass * u.mass * u.light_speed * u.light_speed);
  const auto p = DOParams::from_dimensional(beta, u);
  EXPECT_NEAR(p.beta_tilde, 0.3, 1e-15);
  EXPECT_EQ(energy(p, {0, 1}), u.rest_energy());
  const double c = u.light_speed;
  for (int n : {1, 4, 100}) {
    const double e = energy(p, {n, -1});
    const double g = 1.0 + beta * u.mass * u.hbar * u.omega * n;
    const double bounded = -c / std::sqrt(beta) * std::sqrt(1.0 + (beta * u.mass * u.mass * c * c - 1.0) / (g * g));
    EXPECT_NEAR(e, bounded, 1e-13 * std::abs(e));
    EXPECT_LT(std::abs(e), u.light_speed / std::sqrt(beta));
  }
  EXPECT_THROW(energy(DOParams(0.3, 0.1), {1, 1}), std::invalid_argument);
}

TEST(Spectrum, UndeformedEnergy) {
  DimensionalSet u{1.5, 2.0, 1.0, 0.4};
  const auto p = DOParams::from_dimensional(0.0, u);
  for (int n : {0, 3, 9})
    EXPECT_NEAR(energy(p, {n, 1}), u.rest_energy() * std::sqrt(1.0 + 2.0 * p.omega_tilde * n), 1e-13);
}

TEST(Spectrum, TableShape) {
  const auto t = spectrum_table(DOParams(0.5, 0.1), 5);
  ASSERT_EQ(t.levels.size(), 11u);
  int plus = 0, minus = 0;
  for (const auto& l : t.levels) (l.qn.tau == 1 ? plus : minus)++;
  EXPECT_EQ(plus, 6);
  EXPECT_EQ(minus, 5);
  EXPECT_TRUE(t.monotonic);
  EXPECT_TRUE(t.bounded);
  EXPECT_FALSE(t.monotonicity_violation());
}

TEST(Spectrum, UnphysicalDeformationFlagged) {
  EXPECT_THROW(spectrum_table(DOParams(1.5, 0.1), 5), minlen::acceptability_error);
  const auto t = spectrum_table(DOParams(1.5, 0.1, Mode::diagnostic), 5);
  EXPECT_TRUE(t.monotonicity_violation());
  EXPECT_GT(std::abs(t.levels[1].p0_tilde), std::abs(t.levels[2].p0_tilde));
}

TEST(Spectrum, SelfConsistency) {
  for (double bt : {0.0, 0.1, 0.5, 0.9}) {
    const auto t = spectrum_table(DOParams(bt, 0.3), 30);
    for (const auto& l : t.levels)
      EXPECT_NEAR(l.e_n, l.p0_tilde * l.p0_tilde - 1.0, 1e-12 * std::max(1.0, l.e_n));
  }
}

TEST(Spectrum, AcceptableUpToLargeN) {
  for (double bt : {0.1, 0.5, 0.9}) {
    const DOParams p(bt, 0.1);
    const auto t = spectrum_table(p, 100000);
    EXPECT_TRUE(t.monotonic) << bt;
    EXPECT_TRUE(t.bounded) << bt;
    for (const auto& l : t.levels) ASSERT_LT(bt * l.p0_tilde * l.p0_tilde, 1.0);
  }
}

TEST(Spectrum, LevelC0MatchesAcceptability) {
  const DOParams p(0.4, 0.25);
  for (int n : {0, 1, 6}) {
    const double p0 = p0_allowed(p, {n, 1});
    EXPECT_NEAR(level_c0(p, n), 1.0 - p.beta_tilde * p0 * p0, 1e-15);
  }
}

// (p0^2 - 1) / (2 w) = (1 - b) n (1 + x/2) / (1 + x)^2 with x = b w n, which follows from
// 1 + b K = (1 + x)^2; at b = 0 it is n, so the ratio to the undeformed excitation is the
// x-dependent factor. The excitation above mc^2 itself is p0 - 1 = (p0^2 - 1) / (p0 + 1).
TEST(Spectrum, NonrelativisticExcitationRatio) {
  for (double w : {1e-3, 1e-4})
    for (double bt : {0.1, 0.5, 0.9})
      for (int n : {1, 3, 10}) {
        const DOParams p(bt, w), p_free(0.0, w);
        const double x = bt * w * n;
        const double p0 = p0_allowed(p, {n, 1}), p0_free = p0_allowed(p_free, {n, 1});
        const double factor = (1.0 - bt) * (1.0 + 0.5 * x) / ((1.0 + x) * (1.0 + x));
        EXPECT_NEAR((p0 * p0 - 1.0) / (2.0 * w), n * factor, 1e-10 * n);
        const double ratio = (p0 - 1.0) / (p0_free - 1.0);
        EXPECT_NEAR(ratio, factor, 2.0 * w * n) << w << " " << bt << " " << n;
      }
}
