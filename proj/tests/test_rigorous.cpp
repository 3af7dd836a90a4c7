#include <gtest/gtest.h>

#include <random>

#include "qclass/dual.hpp"
#include "qclass/rigorous.hpp"

using namespace qclass;

namespace {

RigorousReal rat(long p, long q) { return RigorousReal::from_rational(mpq_class(p, q)); }

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(RigorousReal, IntegersArePoints) {
  const RigorousReal x(7L);
  EXPECT_TRUE(x.is_point());
  EXPECT_TRUE(x.contains(7L));
  EXPECT_FALSE(x.contains(8L));
}

TEST(RigorousReal, ThirdIsNotAPointButEnclosed) {
  const RigorousReal third = rat(1, 3);
  EXPECT_FALSE(third.is_point());
  EXPECT_TRUE(third.contains(mpq_class(1, 3)));
  EXPECT_TRUE((third + third).contains(mpq_class(2, 3)));
  EXPECT_TRUE((third * 3L).contains(1L));
}

TEST(RigorousReal, DecimalParsingEnclosesExactValue) {
  const RigorousReal x = RigorousReal::from_decimal("0.1");
  EXPECT_TRUE(x.contains(mpq_class(1, 10)));
  EXPECT_FALSE(x.is_point());
  EXPECT_THROW(RigorousReal::from_decimal("zero"), DomainError);
}

TEST(RigorousReal, RandomArithmeticEnclosesExactRationals) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const mpq_class a = random_rational(rng);
    const mpq_class b = random_rational(rng);
    const RigorousReal x = RigorousReal::from_rational(a);
    const RigorousReal y = RigorousReal::from_rational(b);
    EXPECT_TRUE((x + y).contains(mpq_class(a + b)));
    EXPECT_TRUE((x - y).contains(mpq_class(a - b)));
    EXPECT_TRUE((x * y).contains(mpq_class(a * b)));
    if (b != 0) EXPECT_TRUE((x / y).contains(mpq_class(a / b)));
  }
}

TEST(RigorousReal, DivisionByEnclosureOfZeroThrows) {
  const RigorousReal straddle = RigorousReal::hull(RigorousReal(-1L), RigorousReal(1L));
  EXPECT_THROW(RigorousReal(1L) / straddle, DomainError);
  EXPECT_THROW(RigorousReal(1L) / RigorousReal(0L), DomainError);
}

TEST(RigorousReal, SqrtLogDomains) {
  EXPECT_THROW(sqrt(RigorousReal(-1L)), DomainError);
  EXPECT_THROW(log(RigorousReal(0L)), DomainError);
  EXPECT_TRUE(sqrt(RigorousReal(0L)).contains(0L));
  EXPECT_TRUE(sqrt(RigorousReal(9L)).contains(3L));
}

TEST(RigorousReal, IntegerPowersAllSigns) {
  EXPECT_TRUE(pow(RigorousReal(-2L), 3).contains(-8L));
  EXPECT_TRUE(pow(RigorousReal(-2L), 2).contains(4L));
  EXPECT_TRUE(pow(RigorousReal(2L), -2).contains(mpq_class(1, 4)));
  EXPECT_TRUE(pow(RigorousReal(5L), 0).contains(1L));
  const RigorousReal straddle = RigorousReal::hull(RigorousReal(-1L), RigorousReal(2L));
  const RigorousReal sq = pow(straddle, 2);
  EXPECT_TRUE(sq.contains(0L));
  EXPECT_TRUE(sq.contains(4L));
  EXPECT_FALSE(sq.contains(-1L));
}

TEST(RigorousReal, ExpLogRoundTrip) {
  const RigorousReal x = rat(7, 3);
  EXPECT_TRUE(exp(log(x)).contains(mpq_class(7, 3)));
  EXPECT_TRUE(pow(RigorousReal(4L), rat(1, 2)).contains(2L));
}

TEST(RigorousReal, TrigonometryAtPi) {
  const RigorousReal pi = RigorousReal::pi();
  EXPECT_TRUE(cos(pi).contains(-1L));
  EXPECT_TRUE(sin(pi).contains(0L));
  EXPECT_TRUE(certainly_lt(cos(pi).width(), RigorousReal::from_decimal("1e-30")));
}

TEST(RigorousReal, ComparisonsAreCertain) {
  const RigorousReal a = rat(1, 3);
  const RigorousReal b = rat(1, 2);
  EXPECT_TRUE(certainly_lt(a, b));
  EXPECT_FALSE(certainly_lt(a, a));
  EXPECT_TRUE(certainly_le(RigorousReal(1L), RigorousReal(1L)));
  EXPECT_TRUE(overlaps(a, a));
  EXPECT_FALSE(overlaps(a, b));
}

TEST(RigorousReal, PrecisionScopeRestores) {
  const Bits before = working_precision();
  {
    PrecisionScope scope(512);
    EXPECT_EQ(working_precision(), 512);
    EXPECT_EQ(RigorousReal(1L).precision(), 512);
  }
  EXPECT_EQ(working_precision(), before);
}

TEST(RigorousReal, HigherPrecisionNarrowsEnclosure) {
  const RigorousReal low = RigorousReal::from_rational(mpq_class(1, 3), 64);
  const RigorousReal high = RigorousReal::from_rational(mpq_class(1, 3), 512);
  EXPECT_TRUE(certainly_lt(high.width(), low.width()));
  EXPECT_TRUE(low.contains(high));
}

TEST(RigorousReal, MidpointStaysInside) {
  const RigorousReal x = RigorousReal::hull(rat(1, 7), rat(3, 7));
  EXPECT_TRUE(x.contains(x.midpoint()));
  EXPECT_TRUE(x.midpoint().is_point());
}

TEST(RigorousReal, StringsAreDirected) {
  const RigorousReal third = rat(1, 3);
  EXPECT_EQ(third.lower_string(5), "3.3333e-01");
  EXPECT_EQ(third.upper_string(5), "3.3334e-01");
}

TEST(ParseRational, DecimalsAndFractions) {
  EXPECT_EQ(parse_rational("0.25"), mpq_class(1, 4));
  EXPECT_EQ(parse_rational("1e-3"), mpq_class(1, 1000));
  EXPECT_EQ(parse_rational("-1.5e2"), mpq_class(-150));
  EXPECT_EQ(parse_rational("3/6"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("2"), mpq_class(2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational("1e"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(ParseEnclosure, FractionIsExactWhenRepresentable) {
  EXPECT_TRUE(parse_enclosure("1/4").is_point());
  EXPECT_TRUE(parse_enclosure("1/3").contains(mpq_class(1, 3)));
}

TEST(Dual, DerivativeOfSqrtAndPow) {
  const Dual<RigorousReal> x{RigorousReal(4L), RigorousReal(1L)};
  const auto s = sqrt(x);
  EXPECT_TRUE(s.value.contains(2L));
  EXPECT_TRUE(s.derivative.contains(mpq_class(1, 4)));
  const auto p = pow(x, 3);
  EXPECT_TRUE(p.derivative.contains(48L));
  const auto quotient = 1L / x;
  EXPECT_TRUE(quotient.derivative.contains(mpq_class(-1, 16)));
}
