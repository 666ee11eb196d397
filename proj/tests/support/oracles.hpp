#pragma once

// Test-only reference computations. None of these call into the formulas they
// are used to check: probabilities come from enumerating every step sequence,
// integers from additive recurrences.

#include <cstdint>
#include <map>
#include <vector>

#include "walklab/exact_numerics.hpp"

namespace walklab::oracle {

/// n! as a plain running product.
inline BigInteger iterative_factorial(std::int64_t n) {
  BigInteger result(1);
  for (std::int64_t i = 2; i <= n; ++i) {
    result *= BigInteger(i);
  }
  return result;
}

/// Rows 0..max_n of Pascal's triangle by addition only.
inline std::vector<std::vector<BigInteger>> pascal_triangle(std::int64_t max_n) {
  std::vector<std::vector<BigInteger>> rows{{BigInteger(1)}};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInteger> row(static_cast<std::size_t>(n) + 1, BigInteger(0));
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (l > 0) {
        row[l] += prev[l - 1];
      }
      if (l < prev.size()) {
        row[l] += prev[l];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Per-path bookkeeping for one enumerated walk of n steps.
struct PathSummary {
  std::int64_t end = 0;
  ExactRational probability;
  /// First step s >= 1 at which the walk is back at 0, or 0 if never.
  std::int64_t first_return = 0;
  /// Highest coordinate visited (including the start).
  std::int64_t max_position = 0;
};

/// Every one of the 2^n step sequences, with its probability.
inline std::vector<PathSummary> enumerate_paths(std::int64_t n, const ExactRational& p) {
  const ExactRational q = ExactRational(1) - p;
  std::vector<PathSummary> paths;
  paths.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    PathSummary path{0, ExactRational(1), 0, 0};
    for (std::int64_t s = 1; s <= n; ++s) {
      const bool up = ((bits >> (s - 1)) & 1U) != 0;
      path.end += up ? 1 : -1;
      path.probability *= up ? p : q;
      if (path.end == 0 && path.first_return == 0) {
        path.first_return = s;
      }
      path.max_position = std::max(path.max_position, path.end);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

/// P(X_n = k) by enumeration.
inline std::map<std::int64_t, ExactRational> enumerated_distribution(std::int64_t n, const ExactRational& p) {
  std::map<std::int64_t, ExactRational> out;
  for (const auto& path : enumerate_paths(n, p)) {
    out[path.end] += path.probability;
  }
  return out;
}

/// P(X_n = k and the walk never touched `a` in steps 0..n), for k < a.
inline std::map<std::int64_t, ExactRational> enumerated_avoiding(std::int64_t n, std::int64_t a,
                                                                 const ExactRational& p) {
  std::map<std::int64_t, ExactRational> out;
  for (const auto& path : enumerate_paths(n, p)) {
    if (path.max_position < a) {
      out[path.end] += path.probability;
    }
  }
  return out;
}

/// P(first return to 0 happens exactly at step n).
inline ExactRational enumerated_first_return(std::int64_t n, const ExactRational& p) {
  ExactRational total(0);
  for (const auto& path : enumerate_paths(n, p)) {
    if (path.first_return == n) {
      total += path.probability;
    }
  }
  return total;
}

/// P(X_n = k and no return to 0 during steps 1..n), the delayed-barrier law.
inline std::map<std::int64_t, ExactRational> enumerated_surviving(std::int64_t n, const ExactRational& p) {
  std::map<std::int64_t, ExactRational> out;
  for (const auto& path : enumerate_paths(n, p)) {
    if (path.first_return == 0) {
      out[path.end] += path.probability;
    }
  }
  return out;
}

}  // namespace walklab::oracle
