#pragma once

#include <cstdint>
#include <optional>

#include "kemeny/interval_matrix.hpp"

namespace kemeny {

/// Target guarantee for an elicitation run: with probability 1 - delta the
/// returned ranking's Kemeny score is within rho of optimal.
/// `population` is set when sampling voters without replacement.
struct PACParams {
  int k = 2;
  double rho = 1.0;
  double delta = 0.05;
  std::optional<std::int64_t> population;

  /// Validates k >= 2, 0 < rho <= k(k-1)/2, 0 < delta < 1/2, population >= 1.
  static PACParams make(int k, double rho, double delta, std::optional<std::int64_t> population = {});

  /// x = k(k-1)/rho
  double x() const;
  /// y = ln(k(k-1)/delta), always > 1 for valid parameters
  double y() const;

  bool without_replacement() const noexcept { return population.has_value(); }
};

/// Confidence values are rounded half-up (on magnitude) to this many decimals.
inline constexpr int kConfidenceDigits = 5;
double round_confidence(double c);

/// Offset reported for a pair that has never been sampled.
inline constexpr double kUnsampledOffset = 0.5;

// Unrounded radii. t >= 1, and t <= n where n appears.
double hoeffding_radius(std::int64_t t, double y);
double serfling_radius(std::int64_t t, std::int64_t n, double y);
double serfling_reverse_radius(std::int64_t t, std::int64_t n, double y);

/// sqrt(y / 2t), rounded; 0.5 at t = 0.
double hoeffding_bound(std::int64_t t, const PACParams& params);
/// sqrt((n - t + 1) y / 2tn), rounded; throws InvalidInput for t > n.
double serfling_bound(std::int64_t t, std::int64_t n, const PACParams& params);
/// sqrt((n - t)(t + 1) y / 2t^2 n), rounded; 0 at t = n.
double serfling_reverse_bound(std::int64_t t, std::int64_t n, const PACParams& params);

/// Hoeffding with replacement, the smaller Serfling form without.
double best_bound(std::int64_t t, const PACParams& params);

/// Smallest t with k(k-1) * hoeffding radius <= rho: ceil(x^2 y / 2).
std::int64_t sample_size_with_replacement(const PACParams& params);

/// Per-pair sample size without replacement, ceiled and capped at n.
/// Uses the reverse-Serfling size when n < (x^2 y - 4)/2, the forward one otherwise.
std::int64_t sample_size_without_replacement(const PACParams& params);

/// Offset paired with sample_size_without_replacement: the bound of the branch taken.
double offset_without_replacement(const PACParams& params);

/// Certified Kemeny score gap of the ranking solved on the optimistic matrix:
/// sum over unordered pairs of upper(i,j) + upper(j,i).
double approximation_bound(const IntervalMatrix& m);

}  // namespace kemeny
