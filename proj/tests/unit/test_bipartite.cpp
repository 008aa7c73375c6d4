#include <gtest/gtest.h>

#include <cmath>

#include "gboson/bipartite.hpp"
#include "gboson/qspecial.hpp"

using namespace gboson;

namespace {

const DeformationParams kP(1.3, 2.0, 1.0);

BipartiteParams explicit_geometric(const BipartiteParams& bp, int count) {
  BipartiteParams out = bp;
  for (int m = 0; m < count; ++m) out.boundary.push_back(std::pow(bp.delta, m));
  return out;
}

}  // namespace

TEST(Bipartite, ValidatesParameters) {
  BipartiteParams bp;
  bp.delta = 0.0;
  EXPECT_THROW(bp.validate(), std::invalid_argument);
  bp.delta = 0.5;
  bp.zeta = 0.0;
  EXPECT_THROW(bp.validate(), std::invalid_argument);
  bp.zeta = 0.4;
  bp.boundary = {1.0, 1.5};
  EXPECT_THROW(bp.validate(), std::invalid_argument);
  EXPECT_NO_THROW(BipartiteParams{}.validate());
}

TEST(Bipartite, BoundaryRowAndFirstStep) {
  BipartiteParams bp;
  const Complex rho1 = bp.rho1(kP), rho2 = bp.rho2(kP);
  for (int m = 0; m < 6; ++m) EXPECT_NEAR(std::abs(g_geometric(0, m, bp, kP) - std::pow(bp.delta, m)), 0.0, 1e-15);
  const Complex g10 = (1.0 - rho2 * bp.delta) / rho1;
  EXPECT_NEAR(std::abs(g_geometric(1, 0, bp, kP) - g10), 0.0, 1e-15);

  BipartiteParams general = bp;
  general.boundary = {0.9, 0.4, 0.7, 0.2, 0.5, 0.3};
  for (int m = 0; m < 6; ++m) EXPECT_NEAR(std::abs(g_general(0, m, general, kP) - general.boundary[m]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g_general(1, 0, general, kP) - (0.9 - rho2 * 0.4) / rho1), 0.0, 1e-15);
  EXPECT_THROW(general.boundary_value(6), std::out_of_range);
}

TEST(Bipartite, GeneralSumMatchesGeometricClosedForm) {
  for (const DeformationParams& p : {kP, DeformationParams(1.6, 1.5, 0.5), DeformationParams(0.8, 2.0, 1.0)}) {
    const BipartiteParams bp;
    const BipartiteParams general = explicit_geometric(bp, 20);
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m) {
        const Complex a = g_geometric(n, m, bp, p), b = g_general(n, m, general, p);
        EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12 * std::max(1.0, std::abs(a))) << n << "," << m << " " << p.describe();
      }
  }
}

TEST(Bipartite, VanishingShiftedFactorial) {
  BipartiteParams bp;
  // delta rho2 = 1
  bp.zeta2 = bp.zeta * std::pow(kP.q(), kP.beta() / 2.0) * std::polar(1.0, -kPi * kP.ratio()) / bp.delta;
  EXPECT_NEAR(std::abs(bp.delta * bp.rho2(kP) - 1.0), 0.0, 1e-15);
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 3; ++m) EXPECT_NEAR(std::abs(g_geometric(n, m, bp, kP)), 0.0, 1e-14);
}

TEST(Bipartite, RecurrenceResiduals) {
  const BipartiteParams bp;
  const Eigen::MatrixXcd g = g_matrix(bp, kP, 16);
  EXPECT_LT(g_recurrence_residual(g, bp, kP), 1e-12);
  EXPECT_LT(g_recurrence_residual(g_matrix(explicit_geometric(bp, 40), kP, 16), bp, kP), 1e-12);
  EXPECT_EQ(g_recurrence_residual(Eigen::MatrixXcd::Zero(5, 5), bp, kP), 0.0);
  const BipartiteState s = assemble_state(bp, kP, 16);
  EXPECT_LT(c_recurrence_residual(s.coefficients, bp, kP), 1e-12);
  // A perturbed matrix violates the recurrence.
  Eigen::MatrixXcd bad = g;
  bad(2, 3) += 1e-3;
  EXPECT_GT(g_recurrence_residual(bad, bp, kP), 1e-4);
}

TEST(Bipartite, EigenvectorOfCoproductOfLowering) {
  const BipartiteParams bp;
  const BipartiteState s = assemble_state(bp, kP, 14, true);
  EXPECT_TRUE(s.normalized);
  const EigenResidual r = eigen_residual(s, kP);
  EXPECT_LT(r.interior, 1e-8);
  EXPECT_GE(r.full, r.interior);
}

TEST(Bipartite, NormSingleSumMatchesDoubleSum) {
  for (const DeformationParams& p : {kP, DeformationParams(1.5, 2.0, 1.0), DeformationParams(1.0 + 1e-7, 2.0, 1.0)}) {
    const NormComparison n = norm_check(BipartiteParams{}, p);
    EXPECT_LT(n.relative_gap(), 1e-8) << p.describe();
    EXPECT_GT(n.terms, 0);
  }
  BipartiteParams bp;
  bp.zeta2 = 0.0;
  const NormComparison n = norm_check(bp, kP);
  const double expected = deformed_exp(std::norm(bp.zeta) * std::pow(kP.q(), -kP.beta()), kP).real();
  EXPECT_NEAR(n.single_sum, expected, 1e-13 * expected);
  EXPECT_NEAR(n.double_sum, expected, 1e-13 * expected);
}

TEST(Bipartite, NormalizedStateHasUnitNormUpToTail) {
  const BipartiteState s = assemble_state(BipartiteParams{}, kP, 14, true);
  EXPECT_NEAR(s.coefficients.squaredNorm(), 1.0, 1e-10);
}

TEST(Bipartite, SchmidtEntropy) {
  const Eigen::VectorXcd u = Eigen::VectorXcd::LinSpaced(5, 1.0, 2.0);
  EXPECT_NEAR(schmidt_entropy(u * u.transpose()), 0.0, 1e-12);
  EXPECT_NEAR(schmidt_entropy(Eigen::MatrixXcd::Identity(4, 4)), std::log(4.0), 1e-14);
  EXPECT_EQ(schmidt_entropy(Eigen::MatrixXcd::Zero(3, 3)), 0.0);
  const Eigen::MatrixXcd c = assemble_state(BipartiteParams{}, kP, 14).coefficients;
  EXPECT_NEAR(schmidt_entropy(c * 3.0), schmidt_entropy(c), 1e-14);
}

TEST(Bipartite, EntropyDecreasesTowardsClassicalLimit) {
  const BipartiteParams bp;
  double previous = INFINITY;
  for (double q : {1.5, 1.3, 1.1, 1.01, 1.001, 1.0 + 1e-7}) {
    const double s = schmidt_entropy(assemble_state(bp, DeformationParams(q, 2.0, 1.0), 14, true).coefficients);
    EXPECT_LT(s, previous) << "q = " << q;
    previous = s;
  }
  EXPECT_LT(previous, 1e-4);
}

TEST(Bipartite, FrozenEntropyAtQ15) {
  const double s =
      schmidt_entropy(assemble_state(BipartiteParams{}, DeformationParams(1.5, 2.0, 1.0), 14, true).coefficients);
  EXPECT_NEAR(s, 2.3579529466488782e-3, 1e-12);
}
