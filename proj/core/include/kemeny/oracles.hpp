#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/interval_matrix.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/preferences.hpp"
#include "kemeny/random.hpp"

namespace kemeny {

/// Draws comparisons with replacement: pair (i, j) reports "i wins" with probability q_ij.
///
/// Each unordered pair has its own random stream derived from the seed, so the
/// m-th draw on a pair does not depend on how draws on other pairs interleave.
class BernoulliOracle {
 public:
  BernoulliOracle(WinMatrix truth, std::uint64_t seed);

  /// true when i wins. Throws InvalidInput for i == j.
  bool draw(Arm i, Arm j);

  const WinMatrix& truth() const noexcept { return truth_; }
  int arms() const noexcept { return truth_.size(); }

 private:
  WinMatrix truth_;
  std::vector<Rng> streams_;
};

/// Asks voters of a fixed profile, each voter at most once per unordered pair.
///
/// Every pair walks its own seeded permutation of the voters; after t draws the
/// number of "i wins" answers is Hypergeometric(n, n q_ij, t).
class VoterPool {
 public:
  VoterPool(PreferenceProfile profile, std::uint64_t seed);

  /// true when the next unasked voter for {i, j} prefers i. Throws ExhaustedError
  /// once all n voters have answered for this pair.
  bool draw(Arm i, Arm j);

  std::int64_t remaining(Arm i, Arm j) const;
  std::int64_t population() const noexcept { return profile_.voters(); }
  int arms() const noexcept { return profile_.arms(); }

  const PreferenceProfile& profile() const noexcept { return profile_; }
  /// profile_to_matrix(profile())
  const WinMatrix& truth() const noexcept { return truth_; }

 private:
  std::size_t pair_index(Arm i, Arm j) const;

  PreferenceProfile profile_;
  WinMatrix truth_;
  std::vector<std::vector<int>> positions_;         // per voter, per arm
  std::vector<std::vector<std::int64_t>> orders_;  // per pair, shuffled voter ids
  std::vector<std::int64_t> cursors_;
};

}  // namespace kemeny
