#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "walklab/errors.hpp"
#include "walklab/exact_numerics.hpp"

namespace walklab {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), BigInteger(6));
  EXPECT_EQ(binomial(6, 3), BigInteger(20));
  EXPECT_EQ(binomial(0, 0), BigInteger(1));
  EXPECT_EQ(binomial(7, 0), BigInteger(1));
  EXPECT_EQ(binomial(7, 7), BigInteger(1));
}

TEST(Binomial, OutsideRowIsZero) {
  EXPECT_EQ(binomial(5, 7), BigInteger(0));
  EXPECT_EQ(binomial(5, -1), BigInteger(0));
  EXPECT_EQ(binomial(0, 1), BigInteger(0));
}

TEST(Binomial, NegativeRowRejected) { EXPECT_THROW(binomial(-1, 0), DomainError); }

TEST(Binomial, MatchesPascalTriangleUpTo200) {
  const auto triangle = oracle::pascal_triangle(200);
  for (std::int64_t n = 0; n <= 200; ++n) {
    for (std::int64_t l = 0; l <= n; ++l) {
      ASSERT_EQ(binomial(n, l), triangle[n][l]) << "n=" << n << " l=" << l;
    }
  }
}

TEST(Binomial, PascalIdentityAndRowSums) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    BigInteger row_sum(0);
    for (std::int64_t l = 0; l <= n; ++l) {
      row_sum += binomial(n, l);
      if (l >= 1) {
        ASSERT_EQ(binomial(n, l), binomial(n - 1, l - 1) + binomial(n - 1, l));
      }
    }
    ASSERT_EQ(row_sum, BigInteger(2).pow(static_cast<unsigned long>(n)));
  }
}

TEST(Factorial, KnownValues) {
  EXPECT_EQ(factorial(0), BigInteger(1));
  EXPECT_EQ(factorial(5), BigInteger(120));
  EXPECT_EQ(factorial(10), BigInteger(3628800));
  EXPECT_THROW(factorial(-3), DomainError);
}

TEST(Factorial, MatchesIterativeProduct) {
  for (std::int64_t n = 0; n <= 300; n += 7) {
    ASSERT_EQ(factorial(n), oracle::iterative_factorial(n));
  }
}

TEST(GeneralizedBinomial, HalfIntegerExponents) {
  EXPECT_EQ(generalized_binomial(ExactRational(-1, 2), 2), ExactRational(3, 8));
  EXPECT_EQ(generalized_binomial(ExactRational(1, 2), 1), ExactRational(1, 2));
  EXPECT_EQ(generalized_binomial(ExactRational(1, 2), 2), ExactRational(-1, 8));
  EXPECT_EQ(generalized_binomial(ExactRational(-1, 2), 3), ExactRational(-5, 16));
}

TEST(GeneralizedBinomial, EmptyProductIsOne) {
  EXPECT_EQ(generalized_binomial(ExactRational(-7, 3), 0), ExactRational(1));
  EXPECT_EQ(generalized_binomial(ExactRational(0), 0), ExactRational(1));
  EXPECT_THROW(generalized_binomial(ExactRational(1), -1), DomainError);
}

TEST(GeneralizedBinomial, AgreesWithIntegerBinomial) {
  for (std::int64_t k = 0; k <= 30; ++k) {
    for (std::int64_t l = 0; l <= 35; ++l) {
      ASSERT_EQ(generalized_binomial(ExactRational(k), l), ExactRational(binomial(k, l))) << k << "," << l;
    }
  }
}

TEST(ExactRational, CanonicalForm) {
  const ExactRational r(BigInteger(6), BigInteger(-4));
  EXPECT_EQ(r.numerator(), BigInteger(-3));
  EXPECT_EQ(r.denominator(), BigInteger(2));
  EXPECT_EQ(ExactRational(0, 5).denominator(), BigInteger(1));
  EXPECT_THROW(ExactRational(1, 0), DomainError);
}

TEST(ExactRational, ArithmeticStaysReduced) {
  // Random walk through + - * / checking the gcd probe on every result.
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> pick(-50, 50);
  ExactRational acc(1);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t den = pick(rng);
    if (den == 0) {
      den = 1;
    }
    const ExactRational operand(pick(rng), den);
    switch (i % 4) {
      case 0: acc += operand; break;
      case 1: acc -= operand; break;
      case 2: acc *= operand; break;
      default:
        if (!operand.is_zero()) {
          acc /= operand;
        }
    }
    if (acc.numerator().bit_length() > 4000) {
      acc = ExactRational(1, 3);
    }
    ASSERT_GT(acc.denominator().sign(), 0);
    ASSERT_EQ(gcd(acc.numerator().abs(), acc.denominator()), acc.is_zero() ? acc.denominator() : BigInteger(1));
  }
}

TEST(ExactRational, ParseAndPrint) {
  EXPECT_EQ(ExactRational::parse("1/2"), ExactRational(1, 2));
  EXPECT_EQ(ExactRational::parse("-6/4"), ExactRational(-3, 2));
  EXPECT_EQ(ExactRational::parse("7"), ExactRational(7));
  EXPECT_EQ(ExactRational(3, 8).to_string(), "3/8");
  EXPECT_EQ(ExactRational(4, 2).to_string(), "2");
  EXPECT_THROW(ExactRational::parse("0.5"), DomainError);
  EXPECT_THROW(ExactRational::parse("1/0"), DomainError);
  EXPECT_THROW(ExactRational::parse(""), DomainError);
  EXPECT_THROW(ExactRational::parse("1/"), DomainError);
}

TEST(ExactRational, PowHandlesSignsAndInverse) {
  EXPECT_EQ(ExactRational(-2, 3).pow(3), ExactRational(-8, 27));
  EXPECT_EQ(ExactRational(2, 3).pow(-2), ExactRational(9, 4));
  EXPECT_EQ(ExactRational(0).pow(0), ExactRational(1));
  EXPECT_THROW(ExactRational(0).pow(-1), DomainError);
}

TEST(ExactRational, ToDoubleRoundsToNearest) {
  EXPECT_EQ(ExactRational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(ExactRational(-2, 7).to_double(), -2.0 / 7.0);
  EXPECT_EQ(ExactRational(1, 10).to_double(), 0.1);
  EXPECT_EQ(ExactRational(63, 256).to_double(), 0.24609375);
  // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; ties go to even.
  const BigInteger two53 = BigInteger(2).pow(53);
  EXPECT_EQ(ExactRational(two53 + BigInteger(1)).to_double(), std::ldexp(1.0, 53));
  EXPECT_EQ(ExactRational(two53 + BigInteger(3)).to_double(), std::ldexp(1.0, 53) + 4.0);
  // Huge numerator and denominator that individually overflow double.
  const BigInteger big = BigInteger(10).pow(400);
  EXPECT_EQ(ExactRational(big, big * BigInteger(4)).to_double(), 0.25);
}

TEST(ExactRational, ToDoubleMatchesDivisionForRandomFractions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> pick(1, (std::int64_t{1} << 40));
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t a = pick(rng);
    const std::int64_t b = pick(rng);
    // Both operands are exact doubles, so IEEE division is correctly rounded.
    ASSERT_EQ(ExactRational(a, b).to_double(), static_cast<double>(a) / static_cast<double>(b));
  }
}

}  // namespace
}  // namespace walklab
