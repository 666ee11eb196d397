#pragma once

#include <cstdint>
#include <vector>

#include "output.hpp"

namespace walklab::cli {

/// Rational identities for n <= max_n, p in {1/4, 1/2, 3/4}, barriers a in {1, 2, 3}.
std::vector<CheckResult> exact_suite(std::int64_t max_n);

/// Large-n bounds on a grid of 50 log-spaced n in [10, max_n].
std::vector<CheckResult> asymptotic_suite(std::int64_t max_n);

/// Monte Carlo runs at p = 1/2 against exact escape and absorption values.
std::vector<CheckResult> stochastic_suite(std::uint64_t walks, std::uint64_t seed);

/// `count` integers spread geometrically over [lo, hi], duplicates removed.
std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi, int count);

}  // namespace walklab::cli
