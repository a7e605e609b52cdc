#include "kemeny/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

// Linear index of the unordered pair {a, b}, a < b, in lexicographic order.
std::size_t linear_pair(int k, Arm a, Arm b) {
  return static_cast<std::size_t>(a * (2 * k - a - 1) / 2 + (b - a - 1));
}

void check_pair(int k, Arm i, Arm j) {
  if (i == j) throw InvalidInput("a pair needs two distinct arms");
  if (i < 0 || j < 0 || i >= k || j >= k) throw InvalidInput("arm index out of range");
}

}  // namespace

BernoulliOracle::BernoulliOracle(WinMatrix truth, std::uint64_t seed) : truth_(std::move(truth)) {
  const int k = truth_.size();
  streams_.reserve(static_cast<std::size_t>(pair_count(k)));
  for (std::int64_t p = 0; p < pair_count(k); ++p) streams_.emplace_back(derive_seed(seed, static_cast<std::uint64_t>(p)));
}

bool BernoulliOracle::draw(Arm i, Arm j) {
  const int k = truth_.size();
  check_pair(k, i, j);
  const Arm a = std::min(i, j);
  const Arm b = std::max(i, j);
  const bool a_wins = uniform01(streams_[linear_pair(k, a, b)]) < truth_(a, b);
  return a_wins == (i == a);
}

VoterPool::VoterPool(PreferenceProfile profile, std::uint64_t seed)
    : profile_(std::move(profile)), truth_(profile_to_matrix(profile_)) {
  const int k = profile_.arms();
  const auto n = profile_.voters();
  positions_.reserve(static_cast<std::size_t>(n));
  for (const auto& voter : profile_.rankings()) positions_.push_back(voter.positions());

  const auto pairs = static_cast<std::size_t>(pair_count(k));
  orders_.resize(pairs);
  cursors_.assign(pairs, 0);
  for (std::size_t p = 0; p < pairs; ++p) {
    auto& order = orders_[p];
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::int64_t{0});
    Rng rng(derive_seed(seed, p));
    shuffle(std::span<std::int64_t>(order), rng);
  }
}

std::size_t VoterPool::pair_index(Arm i, Arm j) const {
  check_pair(arms(), i, j);
  return linear_pair(arms(), std::min(i, j), std::max(i, j));
}

bool VoterPool::draw(Arm i, Arm j) {
  const auto p = pair_index(i, j);
  auto& cursor = cursors_[p];
  if (cursor >= population()) throw ExhaustedError("every voter has already answered this pair");
  const auto voter = static_cast<std::size_t>(orders_[p][static_cast<std::size_t>(cursor++)]);
  const auto& pos = positions_[voter];
  return pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)];
}

std::int64_t VoterPool::remaining(Arm i, Arm j) const {
  return population() - cursors_[pair_index(i, j)];
}

}  // namespace kemeny
