#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kemeny/matrix.hpp"
#include "kemeny/ranking.hpp"

namespace kemeny {

struct PACParams;

/// Unordered pair of arms, stored with i < j.
struct Pair {
  Arm i;
  Arm j;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// All k(k-1)/2 pairs in lexicographic order.
std::vector<Pair> all_pairs(int k);

/// Sampling state and confidence intervals for every ordered pair.
///
/// The interval for q_ij is [mean(i,j) - lower(i,j), mean(i,j) + upper(i,j)].
/// Symmetric pruning ties the two sides together: lower(i,j) == upper(j,i).
/// Offsets may go negative after pruning (down to -mean).
class IntervalMatrix {
 public:
  /// Nothing sampled: means 1/2, offsets 1/2 on both sides.
  explicit IntervalMatrix(int k);

  /// Explicit estimates, no pull history. Means must satisfy m_ij + m_ji = 1.
  static IntervalMatrix from_estimates(const SquareMatrix& means, const SquareMatrix& upper,
                                       const SquareMatrix& lower);

  int size() const noexcept { return k_; }

  std::int64_t pulls(Arm i, Arm j) const { return pulls_[at(i, j)]; }
  std::int64_t wins(Arm i, Arm j) const { return wins_[at(i, j)]; }
  double mean(Arm i, Arm j) const { return mean_[at(i, j)]; }
  double upper(Arm i, Arm j) const { return upper_[at(i, j)]; }
  double lower(Arm i, Arm j) const { return lower_[at(i, j)]; }

  void set_upper(Arm i, Arm j, double c) { upper_[at(i, j)] = c; }
  void set_lower(Arm i, Arm j, double c) { lower_[at(i, j)] = c; }

  /// Sets lower(i,j) = upper(j,i) everywhere.
  void sync_lower_from_upper();

  /// One comparison on pair p; first_wins means p.i beat p.j.
  void record(Pair p, bool first_wins);

  /// Discards any pruning and resets every offset to best_bound at the pair's pull count.
  void refresh_offsets(const PACParams& params);

  /// Same offset c on both sides of every pair.
  void set_uniform_offset(double c);

  std::int64_t total_pulls() const;
  /// FNV-1a over the per-pair pull counts.
  std::uint64_t pulls_hash() const;

  SquareMatrix means() const;
  /// mean + upper offset entrywise; diagonal 1/2. May leave [0, 1].
  SquareMatrix optimistic_matrix() const;

  friend bool operator==(const IntervalMatrix&, const IntervalMatrix&) = default;

 private:
  std::size_t at(Arm i, Arm j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
  }

  int k_;
  std::vector<std::int64_t> pulls_;
  std::vector<std::int64_t> wins_;
  std::vector<double> mean_;
  std::vector<double> upper_;
  std::vector<double> lower_;
};

}  // namespace kemeny
