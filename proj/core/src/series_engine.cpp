#include "walklab/series_engine.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "walklab/errors.hpp"

namespace walklab {

namespace {

void require_unit_range(double x, const char* what) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError(std::string(what) + ": x must lie in [-1, 1], got " + std::to_string(x));
  }
}

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": index must be nonnegative, got " + std::to_string(n));
  }
}

// sqrt(1 - x^2) without forming 1 - x^2 directly.
double unit_cofactor(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_;
  double compensation_ = 0.0;
};

// Walks l = 0..max_n, calling visit(l, signed_term, partial_sum) with
// SignedProbability arguments. The gamma term is advanced by the ratio
//   C(2l,l)/C(2l-2,l-1) * x^2/4 = x^2 (2l-1)/(2l).
template <class Visit>
void accumulate(SeriesKind kind, std::int64_t max_n, const SeriesPoint& x, Visit&& visit) {
  require_nonnegative(max_n, "partial sum");
  if (x.is_exact()) {
    const ExactRational& x2 = *x.exact_square();
    ExactRational term(1);
    ExactRational sum(1);
    visit(std::int64_t{0}, SignedProbability::of(term), SignedProbability::of(sum));
    for (std::int64_t l = 1; l <= max_n; ++l) {
      term *= x2 * ExactRational(2 * l - 1, 2 * l);
      if (kind == SeriesKind::gamma) {
        sum += term;
        visit(l, SignedProbability::of(term), SignedProbability::of(sum));
      } else {
        const ExactRational summand = -term / ExactRational(2 * l - 1);
        sum += summand;
        visit(l, SignedProbability::of(summand), SignedProbability::of(sum));
      }
    }
    return;
  }
  const double x2 = x.x() * x.x();
  double term = 1.0;
  CompensatedSum sum(1.0);
  visit(std::int64_t{0}, SignedProbability::of(1.0), SignedProbability::of(1.0));
  for (std::int64_t l = 1; l <= max_n; ++l) {
    term *= x2 * static_cast<double>(2 * l - 1) / static_cast<double>(2 * l);
    const double summand = kind == SeriesKind::gamma ? term : -term / static_cast<double>(2 * l - 1);
    sum.add(summand);
    visit(l, SignedProbability::of(summand), SignedProbability::of(sum.value()));
  }
}

SeriesPartialSum make_partial_sum(SeriesKind kind, const SeriesPoint& x, std::int64_t n,
                                  const SignedProbability& value) {
  return SeriesPartialSum{kind, x.x(), n, value.exact, value.real};
}

SeriesPartialSum final_partial_sum(SeriesKind kind, std::int64_t n, const SeriesPoint& x) {
  SignedProbability last;
  accumulate(kind, n, x, [&](std::int64_t, const SignedProbability&, const SignedProbability& partial) {
    last = partial;
  });
  return make_partial_sum(kind, x, n, last);
}

}  // namespace

SeriesPoint SeriesPoint::exact(const ExactRational& x) {
  if (x.abs() > ExactRational(1)) {
    throw DomainError("x must lie in [-1, 1], got " + x.to_string());
  }
  return SeriesPoint(x.to_double(), x * x);
}

SeriesPoint SeriesPoint::real(double x) {
  require_unit_range(x, "series point");
  return SeriesPoint(x, std::nullopt);
}

SeriesPoint SeriesPoint::from_square(const ExactRational& x_squared, bool negative) {
  if (x_squared.sign() < 0 || x_squared > ExactRational(1)) {
    throw DomainError("x^2 must lie in [0, 1], got " + x_squared.to_string());
  }
  const double magnitude = std::sqrt(x_squared.to_double());
  return SeriesPoint(negative ? -magnitude : magnitude, x_squared);
}

bool SeriesPoint::is_unit() const {
  if (x_squared_) {
    return *x_squared_ == ExactRational(1);
  }
  return std::abs(x_) == 1.0;
}

ExactRational binomial_series_term(const ExactRational& alpha, std::int64_t l, const ExactRational& z) {
  return generalized_binomial(alpha, l) * z.pow(l);
}

double binomial_series_term(const ExactRational& alpha, std::int64_t l, double z) {
  return generalized_binomial(alpha, l).to_double() * detail::integer_power(z, l);
}

double gamma_term(std::int64_t l, double x) {
  require_nonnegative(l, "gamma_term");
  require_unit_range(x, "gamma_term");
  const double half = std::abs(x) / 2.0;
  return detail::binomial_weight(2 * l, l, half, half);
}

SignedProbability gamma_term(std::int64_t l, const SeriesPoint& x) {
  require_nonnegative(l, "gamma_term");
  if (x.is_exact()) {
    return SignedProbability::of(ExactRational(binomial(2 * l, l)) * (*x.exact_square() / ExactRational(4)).pow(l));
  }
  return SignedProbability::of(gamma_term(l, x.x()));
}

double zeta_term(std::int64_t l, double x) {
  if (l < 1) {
    throw DomainError("zeta_term: index must be >= 1");
  }
  return gamma_term(l, x) / static_cast<double>(2 * l - 1);
}

SignedProbability zeta_term(std::int64_t l, const SeriesPoint& x) {
  if (l < 1) {
    throw DomainError("zeta_term: index must be >= 1");
  }
  const SignedProbability term = gamma_term(l, x);
  if (term.exact) {
    return SignedProbability::of(*term.exact / ExactRational(2 * l - 1));
  }
  return SignedProbability::of(term.real / static_cast<double>(2 * l - 1));
}

SeriesPartialSum gamma_partial_sum(std::int64_t n, const SeriesPoint& x) {
  return final_partial_sum(SeriesKind::gamma, n, x);
}

SeriesPartialSum gamma_partial_sum(std::int64_t n, double x) { return gamma_partial_sum(n, SeriesPoint::real(x)); }

SeriesPartialSum zeta_partial_sum(std::int64_t n, const SeriesPoint& x) {
  return final_partial_sum(SeriesKind::zeta, n, x);
}

SeriesPartialSum zeta_partial_sum(std::int64_t n, double x) { return zeta_partial_sum(n, SeriesPoint::real(x)); }

std::vector<SeriesPartialSum> partial_sums(SeriesKind kind, std::int64_t max_n, const SeriesPoint& x) {
  std::vector<SeriesPartialSum> sums;
  sums.reserve(static_cast<std::size_t>(std::max<std::int64_t>(max_n, 0)) + 1);
  accumulate(kind, max_n, x, [&](std::int64_t l, const SignedProbability&, const SignedProbability& partial) {
    sums.push_back(make_partial_sum(kind, x, l, partial));
  });
  return sums;
}

ExactRational zeta_closed_form(std::int64_t n) {
  require_nonnegative(n, "zeta_closed_form");
  return ExactRational(binomial(2 * n, n), BigInteger(4).pow(static_cast<unsigned long>(n)));
}

ExactRational gamma_closed_form(std::int64_t n) { return ExactRational(2 * n + 1) * zeta_closed_form(n); }

StepProbability p_from_x(double x, Branch branch) {
  require_unit_range(x, "p_from_x");
  if (std::abs(x) == 1.0) {
    return StepProbability::exact(ExactRational(1, 2));
  }
  if (x == 0.0) {
    return StepProbability::exact(ExactRational(branch == Branch::plus ? 1 : 0));
  }
  const double s = unit_cofactor(x);
  const double large = (1.0 + s) / 2.0;
  const double small = x * x / (2.0 * (1.0 + s));
  return branch == Branch::plus ? StepProbability::real(large, small) : StepProbability::real(small, large);
}

namespace {

std::optional<ExactRational> rational_sqrt(const ExactRational& value) {
  const mpz_class num = value.numerator().mpz();
  const mpz_class den = value.denominator().mpz();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return ExactRational(BigInteger(mpz_class(sqrt(num))), BigInteger(mpz_class(sqrt(den))));
}

}  // namespace

StepProbability p_from_x(const ExactRational& x, Branch branch) {
  if (x.abs() > ExactRational(1)) {
    throw DomainError("p_from_x: |x| must be <= 1, got " + x.to_string());
  }
  const auto s = rational_sqrt(ExactRational(1) - x * x);
  if (!s) {
    return p_from_x(x.to_double(), branch);
  }
  const ExactRational large = (ExactRational(1) + *s) / ExactRational(2);
  return StepProbability::exact(branch == Branch::plus ? large : ExactRational(1) - large);
}

StirlingEstimates stirling_estimates(std::int64_t n) {
  if (n < 1) {
    throw DomainError("stirling_estimates: n must be >= 1");
  }
  const double nd = static_cast<double>(n);
  const double pi = std::numbers::pi;
  return StirlingEstimates{
      1.0 / std::sqrt(pi * nd),
      std::sqrt(4.0 * nd / pi),
      1.0 / std::sqrt(pi * nd),
      1.0 / std::sqrt(4.0 * pi * nd * nd * nd),
  };
}

double photon_energy_ratio(double x) {
  require_unit_range(x, "photon_energy_ratio");
  return unit_cofactor(x);
}

double received_energy(double emitted_energy, double x) {
  if (!(emitted_energy >= 0.0)) {
    throw DomainError("received_energy: emitted energy must be nonnegative");
  }
  return emitted_energy * photon_energy_ratio(x);
}

std::vector<SeriesRecord> series_dump(SeriesKind kind, std::int64_t max_n, const SeriesPoint& x, bool with_stirling) {
  std::vector<SeriesRecord> records;
  accumulate(kind, max_n, x,
             [&](std::int64_t l, const SignedProbability& term, const SignedProbability& partial) {
               SeriesRecord record{kind, x.x(), l, term, partial, std::nullopt, std::nullopt};
               if (x.is_unit()) {
                 record.closed_form =
                     SignedProbability::of(kind == SeriesKind::gamma ? gamma_closed_form(l) : zeta_closed_form(l));
               }
               if (with_stirling && l >= 1) {
                 const StirlingEstimates estimates = stirling_estimates(l);
                 record.stirling_estimate = kind == SeriesKind::gamma ? estimates.gamma : estimates.zeta;
               }
               records.push_back(std::move(record));
             });
  return records;
}

}  // namespace walklab
