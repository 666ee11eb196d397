#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "walklab/errors.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace walklab {
namespace {

const ExactRational kHalf(1, 2);
const ExactRational kQuarter(1, 4);

std::vector<ExactRational> sample_probabilities() {
  return {ExactRational(0), ExactRational(1, 10), ExactRational(1, 4),
          ExactRational(1, 2), ExactRational(3, 4), ExactRational(1)};
}

WalkParams exact_params(const ExactRational& p) { return WalkParams(StepProbability::exact(p)); }

TEST(Q0P, SpecExamples) {
  EXPECT_EQ(q0p(0, 0, ExactRational(2, 7)), ExactRational(1));
  EXPECT_EQ(q0p(2, 0, kHalf), kHalf);
  EXPECT_EQ(q0p(3, 1, kHalf), ExactRational(3, 8));
  EXPECT_EQ(q0p(2, 0, kQuarter), ExactRational(3, 8));
  EXPECT_EQ(q0p(1, 0, kHalf), ExactRational(0));
}

TEST(Q0P, UnreachablePointsAreZero) {
  EXPECT_EQ(q0p(3, 5, kHalf), ExactRational(0));
  EXPECT_EQ(q0p(3, -5, kHalf), ExactRational(0));
  EXPECT_EQ(q0p(4, 1, kHalf), ExactRational(0));
  EXPECT_EQ(q0p(0, 2, kHalf), ExactRational(0));
  EXPECT_THROW(q0p(-1, 0, kHalf), DomainError);
}

TEST(Q0P, MatchesPathEnumeration) {
  for (const ExactRational& p : {ExactRational(1, 4), ExactRational(1, 3), kHalf, ExactRational(5, 7)}) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      const auto expected = oracle::enumerated_distribution(n, p);
      for (std::int64_t k = -n - 1; k <= n + 1; ++k) {
        const auto it = expected.find(k);
        const ExactRational want = it == expected.end() ? ExactRational(0) : it->second;
        ASSERT_EQ(q0p(n, k, p), want) << "n=" << n << " k=" << k << " p=" << p;
      }
    }
  }
}

TEST(Q0, SymmetricExamples) {
  EXPECT_EQ(q0(4, 0), ExactRational(3, 8));
  EXPECT_EQ(q0(6, -2), ExactRational(15, 64));
  EXPECT_EQ(q0(5, 0), ExactRational(0));
}

TEST(Q0, SymmetricInK) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = -n; k <= n; k += 2) {
      ASSERT_EQ(q0(n, k), q0(n, -k));
    }
  }
}

TEST(Q0P, ReversedIndexSwapsDirections) {
  for (const ExactRational& p : sample_probabilities()) {
    for (std::int64_t n = 0; n <= 20; ++n) {
      for (std::int64_t k = -n; k <= n; ++k) {
        ASSERT_EQ(q0p(n, k, p), q0p(n, -k, ExactRational(1) - p));
      }
    }
  }
}

TEST(Q0P, DegenerateUpwardDrift) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = -n; k <= n; ++k) {
      ASSERT_EQ(q0p(n, k, ExactRational(1)), ExactRational(k == n ? 1 : 0));
    }
  }
}

TEST(DistributionRow, SpecExamples) {
  const LatticeDistribution row2 = distribution_row(2, exact_params(kHalf));
  ASSERT_EQ(row2.size(), 3u);
  EXPECT_EQ(*row2.find(-2)->exact, kQuarter);
  EXPECT_EQ(*row2.find(0)->exact, kHalf);
  EXPECT_EQ(*row2.find(2)->exact, kQuarter);

  const LatticeDistribution row0 = distribution_row(0, exact_params(ExactRational(3, 5)));
  ASSERT_EQ(row0.size(), 1u);
  EXPECT_EQ(*row0.find(0)->exact, ExactRational(1));

  const LatticeDistribution row3 = distribution_row(3, exact_params(kQuarter));
  ASSERT_EQ(row3.size(), 4u);
  EXPECT_EQ(*row3.find(-3)->exact, ExactRational(27, 64));
  EXPECT_EQ(*row3.find(-1)->exact, ExactRational(27, 64));
  EXPECT_EQ(*row3.find(1)->exact, ExactRational(9, 64));
  EXPECT_EQ(*row3.find(3)->exact, ExactRational(1, 64));
  EXPECT_EQ(row3.find(0), nullptr);
}

TEST(DistributionRow, NormalizedExactly) {
  for (const ExactRational& p : sample_probabilities()) {
    for (std::int64_t n = 0; n <= 60; ++n) {
      ExactRational total(0);
      const LatticeDistribution row = distribution_row(n, exact_params(p));
      for (const auto& entry : row.entries()) {
        ASSERT_GE(entry.value.exact->sign(), 0);
        total += *entry.value.exact;
      }
      ASSERT_EQ(total, ExactRational(1)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(DistributionRow, RecurrenceAndClosedFormAgree) {
  for (const ExactRational& p : sample_probabilities()) {
    const ExactRational q = ExactRational(1) - p;
    for (std::int64_t n = 1; n <= 60; ++n) {
      const LatticeDistribution row = distribution_row(n, exact_params(p));
      for (const auto& entry : row.entries()) {
        ASSERT_EQ(entry.value.exact, q0p(n, entry.k, p));
        const ExactRational forward = p * q0p(n - 1, entry.k - 1, p) + q * q0p(n - 1, entry.k + 1, p);
        ASSERT_EQ(*entry.value.exact, forward);
      }
    }
  }
}

TEST(DistributionRow, ParityOfStoredPoints) {
  for (std::int64_t n = 0; n <= 25; ++n) {
    const auto row = distribution_row(n, exact_params(ExactRational(2, 3)));
    EXPECT_EQ(row.size(), static_cast<std::size_t>(n) + 1);
    for (const auto& entry : row.entries()) {
      ASSERT_TRUE(reachable(n, entry.k));
    }
  }
}

TEST(DistributionRow, RealModeTracksExact) {
  const auto exact = distribution_row(40, exact_params(ExactRational(3, 10)));
  const auto real = distribution_row(40, WalkParams(StepProbability::real(0.3)));
  ASSERT_EQ(exact.size(), real.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double want = exact.entries()[i].value.real;
    EXPECT_FALSE(real.entries()[i].value.exact.has_value());
    EXPECT_NEAR(real.entries()[i].value.real, want, 1e-13 * want + 1e-300);
  }
}

TEST(ReturnProbability, SpecExamples) {
  EXPECT_EQ(*return_probability(1, exact_params(kHalf)).exact, kHalf);
  EXPECT_EQ(*return_probability(3, exact_params(kHalf)).exact, ExactRational(5, 16));
  const WalkParams unit_x(p_from_x(1.0, Branch::plus), 1.0);
  EXPECT_EQ(*return_probability(2, unit_x).exact, ExactRational(3, 8));
}

TEST(ReturnProbability, RealModeMatchesSubstitutedForm) {
  for (const double x : {0.1, 0.5, 0.9, 1.0}) {
    for (const Branch branch : {Branch::minus, Branch::plus}) {
      const WalkParams params(p_from_x(x, branch), x);
      for (std::int64_t n = 0; n <= 50; ++n) {
        const double want = binomial(2 * n, n).to_double() * std::pow(x / 2.0, 2.0 * static_cast<double>(n));
        ASSERT_NEAR(return_probability(n, params).real, want, 1e-12 * want) << x << " " << n;
      }
    }
  }
}

TEST(ReturnProbability, BranchesAgree) {
  for (const double x : {0.1, 0.5, 0.9, 1.0}) {
    const WalkParams low(p_from_x(x, Branch::minus), x);
    const WalkParams high(p_from_x(x, Branch::plus), x);
    for (std::int64_t n = 0; n <= 50; ++n) {
      const double a = return_probability(n, low).real;
      const double b = return_probability(n, high).real;
      ASSERT_LE(std::abs(a - b), 1e-12 * std::abs(b)) << "x=" << x << " n=" << n;
    }
  }
}

TEST(WalkParams, RejectsBrokenLinkage) {
  EXPECT_THROW(WalkParams(StepProbability::real(0.5), 0.5), DomainError);
  EXPECT_THROW(WalkParams(StepProbability::real(0.5), 1.5), DomainError);
  EXPECT_NO_THROW(WalkParams(StepProbability::real(0.9), 0.6));
  EXPECT_THROW(StepProbability::real(1.2), DomainError);
  EXPECT_THROW(StepProbability::exact(ExactRational(-1, 3)), DomainError);
}

TEST(Table1, MatchesPascalIntegers) {
  const std::vector<std::vector<std::int64_t>> expected = {
      {1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}, {1, 5, 10, 10, 5, 1}, {1, 6, 15, 20, 15, 6, 1}};
  const auto rows = table1(6);
  ASSERT_EQ(rows.size(), expected.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    EXPECT_EQ(rows[n].scale_exponent, -static_cast<std::int64_t>(n));
    ASSERT_EQ(rows[n].scaled.size(), expected[n].size());
    for (std::size_t i = 0; i < expected[n].size(); ++i) {
      EXPECT_EQ(rows[n].scaled[i], BigInteger(expected[n][i])) << "row " << n;
    }
    if (n % 2 == 0) {
      EXPECT_EQ(rows[n].marked_k, std::optional<std::int64_t>(0));
    } else {
      EXPECT_FALSE(rows[n].marked_k.has_value());
    }
  }
}

TEST(Table1, SingleRowAndCentreOfRowEight) {
  const auto single = table1(0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].scaled, std::vector<BigInteger>{BigInteger(1)});

  const auto pascal = oracle::pascal_triangle(8);
  const auto rows = table1(8);
  EXPECT_EQ(rows[8].scaled[4], pascal[8][4]);
  EXPECT_EQ(rows[8].scaled[4], BigInteger(70));
}

}  // namespace
}  // namespace walklab
