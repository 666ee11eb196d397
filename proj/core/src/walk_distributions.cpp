#include "walklab/walk_distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "walklab/errors.hpp"

namespace walklab {

WalkParams::WalkParams(StepProbability p, std::optional<double> x) : p_(std::move(p)), x_(x) {
  if (!x_) {
    return;
  }
  if (!(std::abs(*x_) <= 1.0)) {
    throw DomainError("x must lie in [-1, 1], got " + std::to_string(*x_));
  }
  const double link = 4.0 * p_.value() * p_.complement();
  if (std::abs(link - *x_ * *x_) > kLinkageTolerance) {
    throw DomainError("p and x violate 4p(1-p) = x^2");
  }
}

LatticeDistribution::LatticeDistribution(std::int64_t n, LatticeRule rule, std::vector<LatticeEntry> entries,
                                         std::int64_t barrier_position)
    : n_(n), rule_(rule), barrier_position_(barrier_position), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
}

const SignedProbability* LatticeDistribution::find(std::int64_t k) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const LatticeEntry& entry, std::int64_t key) { return entry.k < key; });
  if (it == entries_.end() || it->k != k) {
    return nullptr;
  }
  return &it->value;
}

namespace detail {

void require_step_index(std::int64_t n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": step index must be nonnegative, got " + std::to_string(n));
  }
}

}  // namespace detail

SignedProbability q0p(std::int64_t n, std::int64_t k, const StepProbability& p) {
  return detail::dispatch(p, [&](const auto& up, const auto& down) { return detail::q0p(n, k, up, down); });
}

ExactRational q0(std::int64_t n, std::int64_t k) { return q0p(n, k, ExactRational(1, 2)); }

namespace {

// Entry j of a row is the point reached with j up-steps, k = 2j - n.
template <Scalar T>
std::vector<T> forward_rows(std::int64_t n, const T& p, const T& q) {
  std::vector<T> row{T(1)};
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t step = 0; step < n; ++step) {
    std::vector<T> next(row.size() + 1, T(0));
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j > 0) {
        next[j] += p * row[j - 1];
      }
      if (j < row.size()) {
        next[j] += q * row[j];
      }
    }
    row = std::move(next);
  }
  return row;
}

// Same recurrence on integers: with p = a/b every entry of row n is an integer
// over b^n, so the loop needs no rational normalization until the end.
std::vector<ExactRational> forward_rows_exact(std::int64_t n, const ExactRational& p) {
  const BigInteger a = p.numerator();
  const BigInteger b = p.denominator();
  const BigInteger c = b - a;
  std::vector<BigInteger> row{BigInteger(1)};
  for (std::int64_t step = 0; step < n; ++step) {
    std::vector<BigInteger> next(row.size() + 1, BigInteger(0));
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j > 0) {
        next[j] += a * row[j - 1];
      }
      if (j < row.size()) {
        next[j] += c * row[j];
      }
    }
    row = std::move(next);
  }
  const ExactRational scale = ExactRational(b).pow(n);
  std::vector<ExactRational> out;
  out.reserve(row.size());
  for (const BigInteger& value : row) {
    out.push_back(ExactRational(value) / scale);
  }
  return out;
}

template <Scalar T>
LatticeDistribution to_distribution(std::int64_t n, const std::vector<T>& row) {
  std::vector<LatticeEntry> entries;
  entries.reserve(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    entries.push_back({2 * static_cast<std::int64_t>(j) - n, detail::wrap(row[j])});
  }
  return LatticeDistribution(n, LatticeRule::free, std::move(entries));
}

}  // namespace

LatticeDistribution distribution_row(std::int64_t n, const WalkParams& params) {
  detail::require_step_index(n, "distribution_row");
  const StepProbability& p = params.p();
  if (p.is_exact()) {
    return to_distribution(n, forward_rows_exact(n, *p.exact_value()));
  }
  return to_distribution(n, forward_rows(n, p.value(), p.complement()));
}

SignedProbability return_probability(std::int64_t n, const WalkParams& params) {
  detail::require_step_index(n, "return_probability");
  return q0p(2 * n, 0, params.p());
}

ScaledRow scale_row(const LatticeDistribution& row, std::optional<std::int64_t> marked_k) {
  const ExactRational scale = ExactRational(2).pow(row.n());
  std::vector<BigInteger> scaled;
  scaled.reserve(row.size());
  for (const auto& entry : row.entries()) {
    if (!entry.value.exact) {
      throw DomainError("scale_row needs exact values");
    }
    const ExactRational value = *entry.value.exact * scale;
    if (!value.is_integer()) {
      throw DomainError("value at k=" + std::to_string(entry.k) + " is not a multiple of 2^-n");
    }
    scaled.push_back(value.numerator());
  }
  return ScaledRow{row, -row.n(), std::move(scaled), marked_k};
}

std::vector<ScaledRow> table1(std::int64_t max_n) {
  detail::require_step_index(max_n, "table1");
  const WalkParams symmetric(StepProbability::exact(ExactRational(1, 2)));
  std::vector<ScaledRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    std::optional<std::int64_t> marked;
    if (n % 2 == 0) {
      marked = 0;
    }
    rows.push_back(scale_row(distribution_row(n, symmetric), marked));
  }
  return rows;
}

}  // namespace walklab
