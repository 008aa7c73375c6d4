#include <gtest/gtest.h>

#include <cmath>

#include "gboson/fockrep.hpp"
#include "gboson/qspecial.hpp"

using namespace gboson;

namespace {

const DeformationParams kP(1.3, 2.0, 1.0);
constexpr int kDim = 32;

double interior_max(const Eigen::MatrixXcd& m, int size) {
  return m.topLeftCorner(size, size).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(FockSpace, LadderAction) {
  const FockSpace fock(kP, kDim);
  const Eigen::MatrixXcd a = fock.a().matrix;
  EXPECT_NEAR(std::abs(a(0, 1) - std::sqrt(q_number(kP.beta(), kP))), 0.0, 1e-15);
  EXPECT_EQ(a.col(0).cwiseAbs().maxCoeff(), 0.0);
  for (int n = 1; n < kDim; ++n) EXPECT_NEAR(std::norm(a(n - 1, n)), box_number(n, kP), 1e-12 * box_number(n, kP));
  EXPECT_EQ((fock.adag().matrix - a.adjoint()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(FockSpace, DefiningRelationsOnInteriorStates) {
  for (const DeformationParams& p : {kP, DeformationParams(1.7, 1.5, 0.7), DeformationParams(1.0 + 1e-8, 2.0, 1.0)}) {
    const FockSpace fock(p, kDim);
    const Eigen::MatrixXcd a = fock.a().matrix, ad = fock.adag().matrix, nt = fock.ntilde().matrix;
    Eigen::MatrixXcd bracket = Eigen::MatrixXcd::Zero(kDim, kDim);
    for (int n = 0; n < kDim; ++n) bracket(n, n) = q_number(p.alpha() * n + p.beta(), p);
    const int interior = kDim - 1;
    const Eigen::MatrixXcd anti = a * ad + ad * a - bracket;
    const double scale = std::max(1.0, bracket.cwiseAbs().maxCoeff());
    EXPECT_LT(interior_max(anti, interior), 1e-12 * scale) << p.describe();
    const double ladder = a.cwiseAbs().maxCoeff();
    EXPECT_LT(interior_max(nt * ad - ad * nt - ad, interior), 1e-12 * ladder);
    EXPECT_LT(interior_max(nt * a - a * nt + a, interior), 1e-12 * ladder);
  }
}

TEST(FockSpace, RepresentsElements) {
  const BosonAlgebra U(kP);
  const FockSpace fock(kP, 8);
  EXPECT_LT((fock.represent(U.one()).matrix - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((fock.represent(U.ntilde()).matrix - fock.ntilde().matrix).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(fock.ntilde().matrix(3, 3).real(), 3.0 + kP.ratio(), 1e-15);
  EXPECT_NEAR(fock.number().matrix(3, 3).real(), 3.0, 1e-15);
  const Complex phase = std::exp(Complex(0.0, kPi * kP.ratio()));
  EXPECT_NEAR(std::abs(fock.grading().matrix(1, 1) + phase), 0.0, 1e-15);
}

TEST(FockSpace, CoproductOfLoweringOnTwoNodes) {
  const BosonAlgebra U(kP);
  const int d = 6;
  const FockSpace fock(kP, d);
  const Eigen::MatrixXcd da = fock.tensor_coproduct_matrix(U.a());
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(d * d);
  in(1 * d + 0) = 1.0;
  const Eigen::VectorXcd out = da * in;
  const double expected = std::sqrt(q_number(kP.beta(), kP)) * std::pow(kP.q(), kP.beta() / 2.0);
  EXPECT_NEAR(std::abs(out(0) - expected), 0.0, 1e-14);
  EXPECT_NEAR((out.tail(d * d - 1)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(FockSpace, CoproductOfNtildeIsDiagonal) {
  const BosonAlgebra U(kP);
  const int d = 5;
  const FockSpace fock(kP, d);
  const Eigen::MatrixXcd dn = fock.tensor_coproduct_matrix(U.ntilde());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const long idx = i * d + j;
      EXPECT_NEAR(std::abs(dn(idx, idx) - (fock.ntilde_value(i) + fock.ntilde_value(j))), 0.0, 1e-14);
    }
  Eigen::MatrixXcd off = dn;
  off.diagonal().setZero();
  EXPECT_EQ(off.cwiseAbs().maxCoeff(), 0.0);
}

TEST(FockSpace, CoproductRespectsRelationOnTwoNodes) {
  const BosonAlgebra U(kP);
  const int d = 8;
  const FockSpace fock(kP, d);
  const Eigen::MatrixXcd da = fock.tensor_coproduct_matrix(U.a());
  const Eigen::MatrixXcd dad = fock.tensor_coproduct_matrix(U.adag());
  const Eigen::MatrixXcd db = fock.tensor_coproduct_matrix(U.function(U.alpha_bracket()));
  const Eigen::MatrixXcd diff = da * dad + dad * da - db;
  // Columns with both occupations below d - 1 are free of truncation.
  double worst = 0.0;
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j + 1 < d; ++j) worst = std::max(worst, diff.col(i * d + j).cwiseAbs().maxCoeff());
  EXPECT_LT(worst, 1e-10 * db.cwiseAbs().maxCoeff());
}

TEST(FockSpace, RejectsInvalidModules) {
  EXPECT_THROW(FockSpace(kP, 1), std::invalid_argument);
  EXPECT_THROW(FockSpace(DeformationParams(1.3, 2.0, -1.0), 4), std::domain_error);
}
