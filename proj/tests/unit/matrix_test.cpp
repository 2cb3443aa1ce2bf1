#include "mvf/errors.hpp"
#include "mvf/matrix.hpp"
#include "mvf/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mvf;
using oracle::diag;
using oracle::mat2;

TEST(Matrix, FrobeniusNorm) {
  EXPECT_DOUBLE_EQ(frobenius_norm(Matrix::Identity(3, 3)), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(frobenius_norm(Matrix::Zero(4, 4)), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_norm(diag({3, 4})), 5.0);
}

TEST(Matrix, CheckClassBasics) {
  EXPECT_TRUE(check_class(Matrix::Identity(2, 2), ClassTag::SPD).ok);
  const ClassCheck r = check_class(oracle::rot(M_PI / 2), ClassTag::SPD);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.diagnostic, "not symmetric");

  gen::Rng rng(1);
  const Matrix q = Eigen::HouseholderQR<Matrix>(gen::gaussian(4, rng)).householderQ();
  EXPECT_LT(oracle::orthogonality_residual(q), 1e-12);
  EXPECT_TRUE(check_class(q, ClassTag::Orthogonal).ok);
  EXPECT_EQ(check_class(q, ClassTag::SO).ok, q.determinant() > 0);
}

TEST(Matrix, CheckClassEveryTag) {
  gen::Rng rng(2);
  for (ClassTag tag : {ClassTag::GeneralInvertible, ClassTag::SPD, ClassTag::SO,
                       ClassTag::UnitLowerTriangular, ClassTag::UnitUpperTriangular,
                       ClassTag::UpperTriangularPosDiag, ClassTag::LowerTriangularPosDiag,
                       ClassTag::DiagonalPositive}) {
    const Matrix a = gen::in_class(tag, 4, rng);
    EXPECT_TRUE(check_class(a, tag).ok) << to_string(tag) << ": " << check_class(a, tag).diagnostic;
  }
  EXPECT_FALSE(check_class(diag({1, -2}), ClassTag::DiagonalPositive).ok);
  EXPECT_TRUE(check_class(diag({1, -2}), ClassTag::DiagonalNonzero).ok);
  EXPECT_FALSE(check_class(diag({1, 0}), ClassTag::DiagonalNonzero).ok);
  EXPECT_EQ(check_class(mat2(1, 0, 2, 3), ClassTag::UnitLowerTriangular).diagnostic, "diagonal not unit");
  EXPECT_EQ(check_class(mat2(1, 1, 0, 1), ClassTag::UnitLowerTriangular).diagnostic,
            "nonzero entry above diagonal");
  EXPECT_EQ(check_class(mat2(1, 2, 2, 4), ClassTag::GeneralInvertible).diagnostic, "singular");
  EXPECT_EQ(check_class(Matrix::Constant(1, 1, -1.0), ClassTag::PositiveScalar1x1).diagnostic,
            "nonpositive scalar");
  EXPECT_EQ(check_class(diag({1, 1}), ClassTag::PositiveScalar1x1).diagnostic, "not 1x1");
  EXPECT_EQ(check_class(diag({-1, -1, 1}), ClassTag::SO).ok, true);
  EXPECT_EQ(check_class(diag({-1, 1}), ClassTag::SO).diagnostic, "determinant not 1");
}

TEST(Matrix, RequireClassThrows) {
  try {
    require_class(diag({1, -1}), ClassTag::SPD);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassViolation);
  }
}

TEST(Matrix, ClassTagNames) {
  EXPECT_EQ(class_tag_from_string("SPD"), ClassTag::SPD);
  EXPECT_EQ(class_tag_from_string("unit_lower_triangular"), ClassTag::UnitLowerTriangular);
  EXPECT_EQ(class_tag_from_string(to_string(ClassTag::LowerTriangularPosDiag)),
            ClassTag::LowerTriangularPosDiag);
  EXPECT_THROW(class_tag_from_string("banana"), Error);
}

TEST(Matrix, PrincipalMinors) {
  const auto p = principal_minors(diag({2, 3, 4}));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], 2, 1e-14);
  EXPECT_NEAR(p[1], 6, 1e-14);
  EXPECT_NEAR(p[2], 24, 1e-13);
  const auto q = principal_minors(mat2(4, 2, 2, 3));
  EXPECT_NEAR(q[0], 4, 1e-14);
  EXPECT_NEAR(q[1], 8, 1e-14);

  gen::Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = gen::gaussian(5, rng);
    const auto got = principal_minors(a);
    const auto want = oracle::leading_minors(a);
    for (std::size_t i = 0; i < want.size(); ++i)
      EXPECT_NEAR(got[i], want[i], 1e-10 * std::max(1.0, std::abs(want[i])));
    EXPECT_NEAR(determinant(a), oracle::cofactor_det(a), 1e-10 * std::max(1.0, std::abs(want.back())));
  }
}

TEST(Matrix, SymmetricEigenMatchesJacobi) {
  gen::Rng rng(4);
  for (int k = 0; k < 10; ++k) {
    const Matrix a = symmetrize(gen::gaussian(6, rng));
    const Vector got = symmetric_eigen(a).values;
    const Vector want = oracle::jacobi_eigenvalues(a);
    EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Matrix, SpdSqrt) {
  EXPECT_TRUE(spd_sqrt(diag({4, 9})).isApprox(diag({2, 3}), 1e-14));
  EXPECT_TRUE(spd_sqrt(Matrix::Identity(5, 5)).isApprox(Matrix::Identity(5, 5), 1e-14));
  gen::Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const Matrix b = gen::gaussian(4, rng);
    const Matrix a = b * b.transpose() + 0.1 * Matrix::Identity(4, 4);
    const Matrix s = spd_sqrt(a);
    EXPECT_LT((s * s - a).norm(), 1e-10 * a.norm());
    const Matrix a2 = gen::spd(2, rng);
    EXPECT_LT((spd_sqrt(a2) - oracle::sqrt_2x2(a2)).norm(), 1e-12 * a2.norm());
  }
  EXPECT_THROW(spd_sqrt(diag({1, -1})), Error);
}

TEST(Matrix, SpdLogExp) {
  EXPECT_LT(spd_log(Matrix::Identity(3, 3)).norm(), 1e-15);
  EXPECT_TRUE(spd_log(diag({M_E, M_E * M_E})).isApprox(diag({1, 2}), 1e-14));
  gen::Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = gen::spd(5, rng, 2.0);
    EXPECT_LT((spd_exp(spd_log(a)) - a).norm(), 1e-9 * a.norm());
  }
  try {
    spd_log(diag({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSPD);
  }
  EXPECT_THROW(spd_exp(mat2(0, 1, 0, 0)), Error);
}

TEST(Matrix, SoLogPlanar) {
  EXPECT_LT(so_log(Matrix::Identity(3, 3)).norm(), 1e-15);
  for (double theta : {-3.0, -1.0, 0.2, 2.5, 3.1}) {
    const Matrix x = so_log(oracle::rot(theta));
    EXPECT_TRUE(x.isApprox(mat2(0, -theta, theta, 0), 1e-12)) << theta;
  }
  try {
    so_log(oracle::rot(M_PI));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LogBranchFailure);
  }
}

TEST(Matrix, SoExpLogRoundTrip) {
  gen::Rng rng(7);
  for (Eigen::Index n = 2; n <= 7; ++n) {
    for (double norm : {1e-9, 1e-4, 0.5, 2.0, 3.0}) {
      const Matrix x = gen::skew(n, rng, norm);
      const Matrix q = so_exp(x);
      EXPECT_LT(oracle::orthogonality_residual(q), 1e-12);
      EXPECT_NEAR(oracle::cofactor_det(q), 1.0, 1e-12);
      // Frobenius norm of a skew matrix is sqrt(2) x the 2-norm of its angles,
      // so norm <= 3 keeps every angle below pi.
      EXPECT_LT((so_log(q) - x).norm(), 1e-9 * std::max(1.0, norm)) << "n=" << n << " norm=" << norm;
    }
  }
  EXPECT_THROW(so_exp(Matrix::Identity(2, 2)), Error);
}

TEST(Matrix, UnipotentLogExp) {
  gen::Rng rng(8);
  for (Eigen::Index n = 1; n <= 6; ++n) {
    const Matrix l = gen::unit_lower(n, rng, 1.0);
    const Matrix x = unipotent_log(l);
    EXPECT_TRUE(Matrix(x.triangularView<Eigen::StrictlyLower>()).isApprox(x) || x.norm() == 0);
    EXPECT_LT((unipotent_exp(x) - l).norm(), 1e-12 * l.norm());
  }
  Matrix u = Matrix::Identity(2, 2);
  u(0, 1) = 3.0;
  Matrix log_u = Matrix::Zero(2, 2);
  log_u(0, 1) = 3.0;
  EXPECT_TRUE(unipotent_log(u).isApprox(log_u));
}
