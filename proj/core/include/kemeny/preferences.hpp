#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kemeny/matrix.hpp"
#include "kemeny/random.hpp"
#include "kemeny/ranking.hpp"

namespace kemeny {

/// n >= 1 voters, each a strict ranking over the same k arms.
class PreferenceProfile {
 public:
  explicit PreferenceProfile(std::vector<Ranking> voters);

  int arms() const noexcept { return voters_.front().size(); }
  std::int64_t voters() const noexcept { return static_cast<std::int64_t>(voters_.size()); }
  const Ranking& voter(std::int64_t v) const { return voters_.at(static_cast<std::size_t>(v)); }
  const std::vector<Ranking>& rankings() const noexcept { return voters_; }

 private:
  std::vector<Ranking> voters_;
};

/// q_ij = |{v : i above j}| / n, kept exact with denominator n.
WinMatrix profile_to_matrix(const PreferenceProfile& p);

// Realisability checks. Real-valued matrices are tested to 1e-9;
// matrices carrying exact counts are tested in integer arithmetic.
inline constexpr double kValidityTolerance = 1e-9;

/// n * q_ij integral and q_ij + q_ji = 1 for all i != j.
bool check_completeness(const WinMatrix& q, std::int64_t n);

struct Triple {
  Arm l, j, i;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// All ordered triples of distinct arms with q_lj + q_ji < q_li.
std::vector<Triple> check_triangle(const WinMatrix& q);

/// A set of arms whose summed row sums exceed |A| (k - (|A|+1)/2).
struct BordaViolation {
  std::vector<Arm> arms;
  double row_sum_total;
  double bound;
};

/// Only the top-a row sums need checking for each size a.
std::vector<BordaViolation> borda_violations(const WinMatrix& q);
bool check_borda_realisability(const WinMatrix& q);

// Generators. All randomness comes from the caller's engine.

PreferenceProfile gen_uniform_profile(int k, std::int64_t n, Rng& rng);

/// Mallows model via repeated insertion around `reference`, dispersion phi in (0, 1].
/// The m-th reference arm lands d places above the bottom of the partial ranking
/// with probability proportional to phi^d, d in {0..m-1}.
PreferenceProfile gen_mallows_profile(int k, std::int64_t n, double phi, const Ranking& reference, Rng& rng);

/// Uniform over the 2^(k-1) orders single-peaked on the axis 0 < 1 < ... < k-1.
PreferenceProfile gen_single_peaked_profile(int k, std::int64_t n, Rng& rng);

/// Every top-m prefix is a contiguous interval of the natural axis.
bool is_single_peaked(const Ranking& r);

/// Dominance matrix Q with q_ij = (1 + d)/2 for i < j, d = epsilon / (k(k-1)),
/// and its transpose. ||Q - Q^T||_1 = epsilon; the Kemeny rankings are mutually reversed.
std::pair<WinMatrix, WinMatrix> fixture_lemma2(int k, double epsilon);

/// Profiles of n and n-1 voters split between the identity ranking and its reverse
/// (even n: halves, dropping one identity voter; odd n: floor/ceil, dropping one
/// reverse voter). Under identity tie-breaking their Kemeny rankings are reversed.
std::pair<PreferenceProfile, PreferenceProfile> fixture_lemma3(int k, std::int64_t n);

}  // namespace kemeny
