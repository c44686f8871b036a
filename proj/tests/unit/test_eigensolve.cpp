#include <gtest/gtest.h>

#include "minlen/dirac/eigensolve.hpp"

using namespace minlen::dirac;

namespace {

double oracle(const DOParams& p, int k, double c0) {
  const double wk = p.omega_tilde * k;
  return wk * (2.0 + p.beta_tilde * wk) * c0;
}

}  // namespace

TEST(Eigensolve, UndeformedOscillator) {
  const DOParams p(0.0, 0.1);
  const auto r = eigensolve_factorized(p, 1.0, 6);
  ASSERT_EQ(r.eigenvalues.size(), 6u);
  EXPECT_LT(std::abs(r.eigenvalues[0]), 1e-8);
  for (int k = 1; k < 6; ++k) EXPECT_NEAR(r.eigenvalues[k] / (0.2 * k), 1.0, 1e-6) << k;
}

class EigenPairs : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(EigenPairs, MatchesShapeInvariantSpectrum) {
  const auto [bt, w] = GetParam();
  const DOParams p(bt, w);
  const double p0 = p0_allowed(p, {2, 1});
  const double c0 = 1.0 - bt * p0 * p0;
  const auto r = eigensolve_factorized(p, p0, 6);
  for (int k = 0; k < 6; ++k) {
    const double e = oracle(p, k, c0);
    const double err = k == 0 ? std::abs(r.eigenvalues[k]) : std::abs(r.eigenvalues[k] - e) / e;
    EXPECT_LE(err, 1e-5) << "k=" << k;
    if (k > 0) {
      EXPECT_GE(r.extrapolated_order[k], 2.0) << "k=" << k;
    }
  }
  EXPECT_EQ(r.grid_sizes.size(), 4u);
}

INSTANTIATE_TEST_SUITE_P(Grid, EigenPairs,
                         ::testing::Values(std::pair{0.1, 0.1}, std::pair{0.1, 0.5}, std::pair{0.5, 0.1},
                                           std::pair{0.5, 0.5}));

TEST(Eigensolve, PartnerSpectrumDropsZeroMode) {
  const DOParams p(0.5, 0.1);
  const double p0 = p0_allowed(p, {2, 1});
  EigenOptions opt;
  const auto h = eigensolve_factorized(p, p0, 6, opt);
  opt.order = FactorOrder::minus_plus;
  const auto partner = eigensolve_factorized(p, p0, 5, opt);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(partner.eigenvalues[k] / h.eigenvalues[k + 1], 1.0, 1e-6);
}

TEST(Eigensolve, ConvergenceFailureCarriesLog) {
  EigenOptions opt;
  opt.base_size = 15;
  opt.refinements = 2;
  opt.convergence_tol = 1e-14;
  try {
    eigensolve_factorized(DOParams(0.5, 0.5), 1.0, 4, opt);
    FAIL() << "expected convergence_error";
  } catch (const minlen::convergence_error& e) {
    EXPECT_NE(std::string(e.what()).find("N="), std::string::npos) << e.what();
  }
}

TEST(Eigensolve, Preconditions) {
  EXPECT_THROW(eigensolve_factorized(DOParams(1.5, 0.1), 1.0, 3), minlen::acceptability_error);
  EXPECT_THROW(eigensolve_factorized(DOParams(0.5, 0.1), 1.0, 0), std::invalid_argument);
}

TEST(DiracFloor, GenuineLevelVersusMissingState) {
  const DOParams p(0.5, 0.1);
  const auto genuine = dirac_eigen_floor(p, p0_allowed(p, {2, 1}));
  EXPECT_TRUE(genuine.solution_found(1e-4));
  const auto missing = dirac_eigen_floor(p, -1.0);
  EXPECT_FALSE(missing.solution_found(1e-2));
  // The floor does not shrink with refinement.
  EXPECT_NEAR(missing.floor.back() / missing.floor.front(), 1.0, 0.1);
}
