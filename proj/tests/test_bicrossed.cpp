#include <gtest/gtest.h>

#include <random>

#include "qclass/bicrossed.hpp"

using namespace qclass;

namespace {

mpq_class q(long a, long b) {
  mpq_class x(a, b);
  x.canonicalize();
  return x;
}

BicrossedParams irrational() { return BicrossedParams::irrational(q(1, 2), RigorousReal::from_rational(q(5, 4))); }

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(BicrossedParams::rational(q(0, 1), q(1, 2)), DomainError);
  EXPECT_THROW(BicrossedParams::rational(q(1, 1), q(1, 2)), DomainError);
  EXPECT_THROW(BicrossedParams::rational(q(-3, 2), q(1, 2)), DomainError);
  EXPECT_THROW(BicrossedParams::rational(q(1, 2), q(0, 1)), DomainError);
  EXPECT_NO_THROW(BicrossedParams::rational(q(-1, 2), q(2, 3)));
  EXPECT_TRUE(BicrossedParams::rational(q(1, 2), q(2, 3)).is_rational());
  EXPECT_FALSE(irrational().is_rational());
}

TEST(Scaling, IrrationalMode) {
  const auto p = irrational();
  EXPECT_TRUE(is_trivial_scaling({0, 0}, p));
  EXPECT_TRUE(is_trivial_scaling({0, 3}, p));
  EXPECT_FALSE(is_trivial_scaling({1, 0}, p));
  EXPECT_FALSE(is_trivial_scaling({0, q(1, 2)}, p));
  EXPECT_TRUE(is_inner_scaling({q(5, 7), 2}, p));
  EXPECT_FALSE(is_inner_scaling({0, q(1, 2)}, p));
}

TEST(Scaling, RationalMode) {
  // nu log|q| = (2/3) pi, so t = r nu + s pi/log|q| has coordinate 2r/3 + s
  const auto p = BicrossedParams::rational(q(1, 3), q(2, 3));
  EXPECT_TRUE(is_trivial_scaling({3, 0}, p));
  EXPECT_TRUE(is_trivial_scaling({q(3, 2), 0}, p));
  EXPECT_FALSE(is_trivial_scaling({1, 0}, p));
  EXPECT_TRUE(is_trivial_scaling({q(3, 4), q(1, 2)}, p));
  EXPECT_TRUE(is_inner_scaling({q(1, 5), q(1, 7)}, p));
}

TEST(Scaling, TrivialTimesFormAGroup) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  const std::vector<BicrossedParams> params = {irrational(), BicrossedParams::rational(q(1, 3), q(2, 3)),
                                               BicrossedParams::rational(q(-1, 5), q(-5, 4))};
  for (const auto& p : params) {
    for (int trial = 0; trial < 200; ++trial) {
      const ScalingTime a{q(num(rng), den(rng)), q(num(rng), den(rng))};
      const ScalingTime b{q(num(rng), den(rng)), q(num(rng), den(rng))};
      if (is_trivial_scaling(a, p) && is_trivial_scaling(b, p)) EXPECT_TRUE(is_trivial_scaling(a + b, p));
      EXPECT_EQ(is_trivial_scaling(a, p), is_trivial_scaling(-a, p));
      EXPECT_EQ(is_inner_scaling(a, p), is_inner_scaling(-a, p));
      if (is_trivial_scaling(a, p)) EXPECT_TRUE(is_inner_scaling(a, p));
      if (is_inner_scaling(a, p) && is_inner_scaling(b, p)) EXPECT_TRUE(is_inner_scaling(a + b, p));
    }
  }
}

TEST(Center, Descriptions) {
  EXPECT_TRUE(center_description(irrational()).trivial);
  EXPECT_EQ(center_description(irrational()).to_string(), "trivial");
  const auto c = center_description(BicrossedParams::rational(q(1, 2), q(-2, 3)));
  EXPECT_FALSE(c.trivial);
  EXPECT_EQ(c.generator, q(3, 2));
  EXPECT_EQ(c.to_string(), "L^inf(T), generated by u_gamma, gamma in 3/2 Z");
}

TEST(Factor, ConsistentWithCenter) {
  for (const auto& p : {irrational(), BicrossedParams::rational(q(1, 2), q(1, 3))}) {
    EXPECT_EQ(factor_report(p) == std::string(kReportFactor), center_description(p).trivial);
  }
  EXPECT_EQ(factor_report(irrational()), kReportFactor);
}

TEST(Isomorphism, NecessaryConditions) {
  const auto a = irrational();
  EXPECT_EQ(iso_necessary(a, a), Tri::Yes);
  EXPECT_EQ(iso_necessary(a, BicrossedParams::irrational(q(1, 3), RigorousReal::from_decimal("1.25"))), Tri::No);
  EXPECT_EQ(iso_necessary(a, BicrossedParams::irrational(q(-1, 2), RigorousReal(2L))), Tri::Undetermined);
  EXPECT_EQ(iso_necessary(a, BicrossedParams::rational(q(1, 2), q(1, 3))), Tri::No);
  EXPECT_EQ(iso_necessary(BicrossedParams::rational(q(1, 2), q(1, 3)), BicrossedParams::rational(q(-1, 2), q(5, 7))),
            Tri::Yes);
  const auto b = BicrossedParams::irrational(q(1, 2), RigorousReal(7L));
  EXPECT_EQ(iso_necessary(a, b, NuRelation{2, 0}), Tri::Yes);
  EXPECT_EQ(iso_necessary(a, b, NuRelation{-1, 0}), Tri::Yes);
  EXPECT_EQ(iso_necessary(a, b, NuRelation{q(3, 7), 0}), Tri::Yes);
  // nu' / 2 = nu / 2 + pi / (2 log|q|) is not in nu Q + (pi / log|q|) Z
  EXPECT_EQ(iso_necessary(a, b, NuRelation{1, 1}), Tri::No);
  EXPECT_EQ(iso_necessary(a, b, NuRelation{1, q(1, 2)}), Tri::No);
  EXPECT_EQ(iso_necessary(a, b, NuRelation{0, 1}), Tri::No);
}

TEST(Isomorphism, Symmetric) {
  const std::vector<BicrossedParams> params = {irrational(), BicrossedParams::rational(q(1, 2), q(1, 3)),
                                               BicrossedParams::rational(q(1, 4), q(1, 3)),
                                               BicrossedParams::irrational(q(1, 4), RigorousReal(1L))};
  for (const auto& x : params) {
    EXPECT_NE(iso_necessary(x, x), Tri::No);
    for (const auto& y : params) EXPECT_EQ(iso_necessary(x, y), iso_necessary(y, x));
  }
}

TEST(HRepresentations, SpectrumUsesAbsoluteQ) {
  const auto p = BicrossedParams::rational(q(-1, 2), q(1, 3));
  const auto rho = rho_spectrum(HIrrep{q(3, 7), Ladder{1}}, p);
  ASSERT_EQ(rho.eigenvalues.size(), 2u);
  EXPECT_TRUE(rho.trace().contains(q(5, 2)));
  EXPECT_EQ((HIrrep{q(3, 7), Ladder{2}}).to_string(), "(3/7, 2)");
}
