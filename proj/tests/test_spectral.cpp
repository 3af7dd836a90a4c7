#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qclass/spectral.hpp"

using namespace qclass;

namespace {

RigorousReal rat(long p, long q) { return RigorousReal::from_rational(mpq_class(p, q)); }

}  // namespace

TEST(ModularNorm, Examples) {
  const auto trivial = rho_spectrum(Ladder{0}, rat(1, 2));
  EXPECT_TRUE(modular_norm_sq(trivial, rat(1, 3)).contains(1L));
  // rho = diag(1/2, 2), b = 0: (2 + 1/2) / (5/2) = 1
  const auto fund = rho_spectrum(Ladder{1}, rat(1, 2));
  EXPECT_TRUE(modular_norm_sq(fund, RigorousReal(0L)).contains(1L));
  // b = -1/2: sum lambda / trace = 1
  EXPECT_TRUE(modular_norm_sq(fund, rat(-1, 2)).contains(1L));
  // b = 1/4: (4 + 1/4) / (5/2) = 17/10
  EXPECT_TRUE(modular_norm_sq(fund, rat(1, 4)).contains(mpq_class(17, 10)));
}

TEST(ModularNorm, SymmetricAboutMinusQuarter) {
  // lambda^{-4b-1} and lambda^{4b+1} swap under b -> -1/2 - b, and the spectrum is inversion symmetric.
  const auto rho = rho_spectrum(Ladder{4}, RigorousReal::from_decimal("0.3"));
  for (long k = -4; k <= 4; ++k) {
    const RigorousReal b = rat(k, 5);
    EXPECT_TRUE(overlaps(modular_norm_sq(rho, b), modular_norm_sq(rho, rat(-1, 2) - b)));
  }
}

TEST(ModularEigencoefficients, UnitModulusAndSign) {
  const auto rho = rho_spectrum(Ladder{1}, rat(1, 2));
  // 2t ln 2 = pi gives lambda^{2it} = -1 for lambda in {1/2, 2}
  const RigorousReal t = RigorousReal::pi() / (2L * log(RigorousReal(2L)));
  const auto c = modular_eigencoefficients(rho, t);
  ASSERT_EQ(c.size(), 2u);
  for (const auto& z : c) {
    EXPECT_TRUE(z.re.contains(-1L));
    EXPECT_TRUE(z.im.contains(0L));
  }
  const auto generic = modular_eigencoefficients(rho_spectrum(Ladder{3}, rat(1, 3)), rat(7, 10));
  for (const auto& z : generic) EXPECT_TRUE((z.re * z.re + z.im * z.im).contains(1L));
}

TEST(Jacobi, Entries) {
  const auto t = build_jacobi(4, 0.5L);
  ASSERT_EQ(t.off_diagonal.size(), 3u);
  EXPECT_NEAR(static_cast<double>(t.off_diagonal[0]), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(static_cast<double>(t.off_diagonal[2]), std::sqrt(1 - 1.0 / 64), 1e-15);
  const MatrixLD m = t.matrix();
  EXPECT_EQ(m(0, 0), 0.0L);
  EXPECT_EQ(m(0, 1), m(1, 0));
  EXPECT_EQ(m(0, 2), 0.0L);
}

TEST(Jacobi, Errors) {
  EXPECT_THROW(build_jacobi(1, 0.5L), DomainError);
  EXPECT_THROW(build_jacobi(4, 0.0L), DomainError);
  EXPECT_THROW(build_jacobi(4, 1.0L), DomainError);
}

TEST(Jacobi, KrylovRankAndCommutantOnGrid) {
  for (std::size_t m : {2u, 3u, 4u, 8u, 12u, 16u}) {
    for (int k = 1; k <= 9; ++k) {
      const auto t = build_jacobi(m, k / 10.0L);
      EXPECT_EQ(krylov_rank(t), m) << m << " " << k;
      EXPECT_EQ(commutant_dim(t), m) << m << " " << k;
      EXPECT_GT(min_eigenvalue_gap(t), 1e-6L);
    }
  }
}

TEST(Jacobi, CommutantMatchesDenseOracle) {
  for (std::size_t m : {2u, 5u, 9u, 16u}) {
    for (long double q : {0.2L, 0.5L, 0.8L}) {
      const auto t = build_jacobi(m, q);
      EXPECT_EQ(commutant_dim(t), commutant_dim_dense(t.matrix())) << m << " " << static_cast<double>(q);
    }
  }
}

TEST(Commutant, RepeatedEigenvalueIsDetected) {
  MatrixLD d = MatrixLD::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 2) = 2;
  EXPECT_EQ(commutant_dim(d), 5u);
  EXPECT_EQ(commutant_dim_dense(d), 5u);
  EXPECT_EQ(commutant_dim(MatrixLD::Identity(4, 4)), 16u);
}

TEST(Commutant, Budget) {
  EXPECT_THROW(commutant_dim(build_jacobi(65, 0.5L)), BudgetError);
  EXPECT_NO_THROW(commutant_dim(build_jacobi(64, 0.5L)));
  EXPECT_THROW(commutant_dim_dense(MatrixLD::Identity(17, 17)), BudgetError);
}

TEST(NumericalRank, Examples) {
  MatrixLD a = MatrixLD::Zero(3, 3);
  EXPECT_EQ(numerical_rank(a), 0u);
  a(0, 0) = 1;
  a(1, 1) = 1e-12L;
  EXPECT_EQ(numerical_rank(a), 1u);
  EXPECT_EQ(numerical_rank(MatrixLD::Identity(5, 5)), 5u);
}

TEST(Relations, InteriorResidualsVanish) {
  for (std::size_t m : {4u, 8u, 16u}) {
    for (int k = 1; k <= 9; ++k) {
      for (double phase : {0.0, 1.0, 2.5}) {
        const auto lambda = std::polar(1.0L, static_cast<long double>(phase));
        const auto r = suq2_relation_residuals(m, k / 10.0L, lambda);
        EXPECT_LE(r.interior_max, 1e-12L) << m << " " << k << " " << phase;
      }
    }
  }
}

TEST(Relations, TruncationShowsAtTheBoundary) {
  const auto r = suq2_relation_residuals(6, 0.5L, {1.0L, 0.0L});
  // alpha alpha* misses the last basis vector, so the second relation fails there
  EXPECT_GT(r.boundary_max, 0.1L);
}

TEST(Relations, Errors) {
  EXPECT_THROW(suq2_relation_residuals(3, 0.5L, {1.0L, 0.0L}), DomainError);
  EXPECT_THROW(suq2_relation_residuals(6, 0.5L, {2.0L, 0.0L}), DomainError);
  EXPECT_THROW(suq2_relation_residuals(6, 1.5L, {1.0L, 0.0L}), DomainError);
}
