#pragma once

// Power series of gamma(x) = 1/sqrt(1-x^2) and zeta(x) = sqrt(1-x^2) and their
// link to the walk:
//
//   gamma(x) = sum_{l>=0} C(2l,l) (x/2)^(2l)            = sum_l Q0P(2l, 0, p)
//   zeta(x)  = 1 - sum_{l>=1} C(2l,l) (x/2)^(2l)/(2l-1) = 1 - sum_l |Q2P(2l, 0, p)|
//
// whenever 4p(1-p) = x^2. Only truncated sums are ever evaluated; at x = +-1
// they have the closed forms
//
//   gamma_2n(1) = (2n+1) C(2n,n) / 4^n,    zeta_2n(1) = C(2n,n) / 4^n.

#include <cstdint>
#include <optional>
#include <vector>

#include "walklab/exact_numerics.hpp"
#include "walklab/probability.hpp"

namespace walklab {

/// The series variable x in [-1, 1]. Exact arithmetic is available whenever
/// x^2 is rational, which is what the series actually depend on.
class SeriesPoint {
 public:
  /// Throws DomainError for |x| > 1.
  static SeriesPoint exact(const ExactRational& x);
  /// Throws DomainError for |x| > 1 or non-finite x.
  static SeriesPoint real(double x);
  /// x = +-sqrt(x_squared); throws DomainError unless 0 <= x_squared <= 1.
  static SeriesPoint from_square(const ExactRational& x_squared, bool negative = false);

  double x() const { return x_; }
  const std::optional<ExactRational>& exact_square() const { return x_squared_; }
  bool is_exact() const { return x_squared_.has_value(); }
  /// |x| = 1, where the closed forms apply.
  bool is_unit() const;

 private:
  SeriesPoint(double x, std::optional<ExactRational> x_squared) : x_(x), x_squared_(std::move(x_squared)) {}

  double x_;
  std::optional<ExactRational> x_squared_;
};

enum class SeriesKind { gamma, zeta };

struct SeriesPartialSum {
  SeriesKind kind = SeriesKind::gamma;
  double x = 0.0;
  /// Highest return index included.
  std::int64_t n = 0;
  std::optional<ExactRational> exact_value;
  double real_value = 0.0;
};

/// C(alpha, l) z^l.
ExactRational binomial_series_term(const ExactRational& alpha, std::int64_t l, const ExactRational& z);
double binomial_series_term(const ExactRational& alpha, std::int64_t l, double z);

/// C(2l,l) (x/2)^(2l), exact when the point is.
SignedProbability gamma_term(std::int64_t l, const SeriesPoint& x);
double gamma_term(std::int64_t l, double x);

/// C(2l,l) (x/2)^(2l) / (2l-1) for l >= 1; the magnitude of the l-th summand
/// subtracted from 1 in zeta. Throws DomainError for l < 1.
SignedProbability zeta_term(std::int64_t l, const SeriesPoint& x);
double zeta_term(std::int64_t l, double x);

/// sum_{m=0}^{n} gamma_term(m, x).
SeriesPartialSum gamma_partial_sum(std::int64_t n, const SeriesPoint& x);
SeriesPartialSum gamma_partial_sum(std::int64_t n, double x);

/// 1 - sum_{m=1}^{n} zeta_term(m, x).
SeriesPartialSum zeta_partial_sum(std::int64_t n, const SeriesPoint& x);
SeriesPartialSum zeta_partial_sum(std::int64_t n, double x);

/// Partial sums for every n in 0..max_n, from a single accumulation pass.
std::vector<SeriesPartialSum> partial_sums(SeriesKind kind, std::int64_t max_n, const SeriesPoint& x);

/// (2n+1) C(2n,n) / 4^n, the value of gamma_2n(1).
ExactRational gamma_closed_form(std::int64_t n);
/// C(2n,n) / 4^n, the value of zeta_2n(1).
ExactRational zeta_closed_form(std::int64_t n);

enum class Branch { minus, plus };

/// (1 - sqrt(1-x^2))/2 or (1 + sqrt(1-x^2))/2, with the complement computed
/// without cancellation. Throws DomainError for |x| > 1.
StepProbability p_from_x(double x, Branch branch);
/// Exact when sqrt(1-x^2) is rational, otherwise the real-valued result above.
StepProbability p_from_x(const ExactRational& x, Branch branch);

struct StirlingEstimates {
  double q0_center = 0.0;   ///< Q0(2n,0) ~ 1/sqrt(pi n)
  double gamma = 0.0;       ///< gamma_2n(1) ~ sqrt(4n/pi)
  double zeta = 0.0;        ///< zeta_2n(1) ~ 1/sqrt(pi n)
  double absorption = 0.0;  ///< |Q2P(2n,0,1/2)| ~ 1/sqrt(4 pi n^3)
};

/// Leading-order large-n estimates. Throws DomainError for n < 1.
StirlingEstimates stirling_estimates(std::int64_t n);

/// E_a / E_e = sqrt(1 - x^2). Throws DomainError for |x| > 1.
double photon_energy_ratio(double x);
/// emitted_energy * sqrt(1 - x^2). Throws DomainError for |x| > 1 or negative energy.
double received_energy(double emitted_energy, double x);

/// One line of a series dump.
struct SeriesRecord {
  SeriesKind kind = SeriesKind::gamma;
  double x = 0.0;
  std::int64_t l = 0;
  /// Signed summand added at index l (for zeta: 1 at l = 0, then -zeta_term).
  SignedProbability term;
  SignedProbability partial_sum;
  /// Present at |x| = 1.
  std::optional<SignedProbability> closed_form;
  /// Present when requested and l >= 1.
  std::optional<double> stirling_estimate;
};

std::vector<SeriesRecord> series_dump(SeriesKind kind, std::int64_t max_n, const SeriesPoint& x, bool with_stirling);

}  // namespace walklab
