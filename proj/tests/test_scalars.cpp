#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "qclass/scalars.hpp"

using namespace qclass;

namespace {

// Exact value of p at a rational point.
mpq_class exact_eval(const LaurentScalar& p, const mpq_class& q) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class num;
    mpz_class den;
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    mpq_class power = e >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    power.canonicalize();
    sum += power * mpq_class(static_cast<long>(c));
  }
  return sum;
}

RigorousReal dec(const char* s) { return RigorousReal::from_decimal(s); }

// Whether x meets the reference value s, read as exact to its last printed digit.
bool contains_decimal(const RigorousReal& x, const std::string& s) {
  const auto point = s.find('.');
  const long digits = point == std::string::npos ? 0 : static_cast<long>(s.size() - point - 1);
  const RigorousReal ulp = RigorousReal::from_decimal("1e-" + std::to_string(digits));
  const RigorousReal ref = RigorousReal::from_decimal(s);
  return overlaps(x, RigorousReal::hull(ref - ulp, ref + ulp));
}

}  // namespace

TEST(QNumber, SmallCases) {
  EXPECT_TRUE(q_number(0).is_zero());
  EXPECT_EQ(q_number(1), LaurentScalar::monomial(0));
  EXPECT_EQ(q_number(2), LaurentScalar::monomial(-1) + LaurentScalar::monomial(1));
  EXPECT_EQ(q_number(4), LaurentScalar::monomial(-3) + LaurentScalar::monomial(-1) + LaurentScalar::monomial(1) +
                             LaurentScalar::monomial(3));
  EXPECT_EQ(q_number(2).to_string(), "q^-1 + q");
  EXPECT_EQ(q_number(3).to_string(), "q^-2 + 1 + q^2");
}

TEST(QNumber, Palindromic) {
  for (unsigned n = 0; n <= 64; ++n) EXPECT_TRUE(q_number(n).is_palindromic()) << n;
}

TEST(QNumber, FundamentalRecursion) {
  for (unsigned n = 1; n <= 40; ++n) {
    EXPECT_EQ(q_number(2) * q_number(n), q_number(n - 1) + q_number(n + 1)) << n;
  }
}

TEST(LaurentScalar, CanonicalFormDropsZeros) {
  const LaurentScalar p = LaurentScalar::monomial(2, 3) + LaurentScalar::monomial(2, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
  EXPECT_EQ((LaurentScalar::monomial(1, 2) - LaurentScalar::monomial(-1)).to_string(), "-q^-1 + 2*q");
}

TEST(LaurentScalar, OverflowIsReported) {
  const auto big = LaurentScalar::monomial(0, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + LaurentScalar::monomial(0, 1), BudgetError);
  EXPECT_THROW(big * LaurentScalar::monomial(0, 2), BudgetError);
}

TEST(Eval, Examples) {
  EXPECT_TRUE(eval(q_number(2), RigorousReal::from_rational(mpq_class(1, 2))).contains(mpq_class(5, 2)));
  EXPECT_TRUE(eval(q_number(3), RigorousReal(1L)).contains(3L));
  // 0.3^-4 + 0.3^-2 + 1 + 0.3^2 + 0.3^4 = 109889461 / 810000
  const RigorousReal five = eval(q_number(5), dec("0.3"));
  EXPECT_TRUE(five.contains(mpq_class(109889461, 810000)));
  EXPECT_TRUE(contains_decimal(five, "135.66600123456790123"));
}

TEST(Eval, AtOneGivesN) {
  for (unsigned n = 0; n <= 64; ++n) EXPECT_TRUE(eval(q_number(n), RigorousReal(1L)).contains(static_cast<long>(n)));
}

TEST(Eval, DomainErrors) {
  EXPECT_THROW(eval(q_number(2), RigorousReal(0L)), DomainError);
  EXPECT_THROW(eval(q_number(2), RigorousReal::hull(RigorousReal(-1L), RigorousReal(1L))), DomainError);
  EXPECT_THROW(eval(q_number(2), RigorousReal(2L)), DomainError);
}

TEST(Eval, EnclosesExactValueAtSamplePoints) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> exponent(-6, 6);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  std::uniform_int_distribution<int> numerator(1, 99);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentScalar p;
    for (int k = 0; k < 4; ++k) p = p + LaurentScalar::monomial(exponent(rng), coefficient(rng));
    mpq_class a(numerator(rng), 100);
    mpq_class b(numerator(rng), 100);
    if (a > b) std::swap(a, b);
    a.canonicalize();
    b.canonicalize();
    const RigorousReal q = RigorousReal::hull(RigorousReal::from_rational(a), RigorousReal::from_rational(b));
    const RigorousReal value = eval(p, q);
    mpq_class mid = (a + b) / 2;
    mid.canonicalize();
    for (const mpq_class& sample : {a, b, mid}) {
      EXPECT_TRUE(value.contains(exact_eval(p, sample))) << p.to_string() << " at " << sample.get_str();
    }
  }
}

TEST(Eval, WorksOnDuals) {
  // d/dq [2]_q = 1 - q^-2, equal to -3 at q = 1/2
  const Dual<RigorousReal> q{RigorousReal::from_rational(mpq_class(1, 2)), RigorousReal(1L)};
  const auto v = eval(q_number(2), q);
  EXPECT_TRUE(v.value.contains(mpq_class(5, 2)));
  EXPECT_TRUE(v.derivative.contains(-3L));
}

TEST(QInteger, AgreesWithSumForm) {
  for (const char* text : {"0.05", "0.3", "0.5", "0.9", "0.999"}) {
    const RigorousReal q = dec(text);
    for (unsigned n = 0; n <= 30; ++n) {
      const RigorousReal a = q_integer(n, q);
      const RigorousReal b = eval(q_number(n), q);
      EXPECT_TRUE(overlaps(a, b)) << text << " " << n;
    }
  }
  EXPECT_TRUE(q_integer(7, RigorousReal(1L)).contains(7L));
  EXPECT_TRUE(q_integer(1, dec("0.3")).is_point());
}

TEST(QInteger, StraddlingOneFallsBackToSumForm) {
  const RigorousReal q = RigorousReal::hull(dec("0.999"), RigorousReal(1L));
  const RigorousReal v = q_integer(4, q);
  EXPECT_TRUE(v.contains(4L));
}

TEST(SolveFundamentalQ, Examples) {
  EXPECT_TRUE(solve_fundamental_q(RigorousReal(2L)).contains(1L));
  // (3 - sqrt 5) / 2
  EXPECT_TRUE(contains_decimal(solve_fundamental_q(RigorousReal(3L)), "0.38196601125010515179541316563436188228"));
  EXPECT_TRUE(solve_fundamental_q(RigorousReal::from_rational(mpq_class(5, 2))).contains(mpq_class(1, 2)));
  EXPECT_THROW(solve_fundamental_q(RigorousReal::from_rational(mpq_class(19, 10))), DomainError);
}

TEST(SolveFundamentalQ, InvertsTheDimension) {
  for (long num = 200; num <= 1000; num += 37) {
    const mpq_class d(num, 100);
    const RigorousReal q = solve_fundamental_q(RigorousReal::from_rational(d));
    EXPECT_TRUE((q + 1L / q).contains(d)) << d.get_str();
    EXPECT_TRUE(certainly_gt(q, 0L));
    EXPECT_TRUE(certainly_le(q, 1L));
  }
}
