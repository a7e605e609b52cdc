#include "kemeny/interval_matrix.hpp"

#include <cmath>

#include "kemeny/confidence.hpp"
#include "kemeny/errors.hpp"

namespace kemeny {

std::vector<Pair> all_pairs(int k) {
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(k)));
  for (Arm i = 0; i < k; ++i)
    for (Arm j = i + 1; j < k; ++j) pairs.push_back({i, j});
  return pairs;
}

IntervalMatrix::IntervalMatrix(int k) : k_(k) {
  if (k < 1) throw InvalidInput("interval matrix needs at least one arm");
  const auto cells = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  pulls_.assign(cells, 0);
  wins_.assign(cells, 0);
  mean_.assign(cells, 0.5);
  upper_.assign(cells, kUnsampledOffset);
  lower_.assign(cells, kUnsampledOffset);
  for (int i = 0; i < k; ++i) upper_[at(i, i)] = lower_[at(i, i)] = 0.0;
}

IntervalMatrix IntervalMatrix::from_estimates(const SquareMatrix& means, const SquareMatrix& upper,
                                              const SquareMatrix& lower) {
  const int k = means.size();
  if (upper.size() != k || lower.size() != k) throw InvalidInput("from_estimates: dimension mismatch");
  IntervalMatrix m(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (std::abs(means(i, j) + means(j, i) - 1.0) > 1e-12) {
        throw InvalidInput("from_estimates: means must satisfy m_ij + m_ji = 1");
      }
      m.mean_[m.at(i, j)] = means(i, j);
      m.upper_[m.at(i, j)] = upper(i, j);
      m.lower_[m.at(i, j)] = lower(i, j);
    }
  }
  return m;
}

void IntervalMatrix::sync_lower_from_upper() {
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) lower_[at(i, j)] = upper_[at(j, i)];
}

void IntervalMatrix::record(Pair p, bool first_wins) {
  if (p.i == p.j || p.i < 0 || p.j < 0 || p.i >= k_ || p.j >= k_) throw InvalidInput("record: bad pair");
  const auto t = ++pulls_[at(p.i, p.j)];
  pulls_[at(p.j, p.i)] = t;
  ++wins_[first_wins ? at(p.i, p.j) : at(p.j, p.i)];
  const double m = static_cast<double>(wins_[at(p.i, p.j)]) / static_cast<double>(t);
  mean_[at(p.i, p.j)] = m;
  mean_[at(p.j, p.i)] = static_cast<double>(wins_[at(p.j, p.i)]) / static_cast<double>(t);
}

void IntervalMatrix::refresh_offsets(const PACParams& params) {
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      const double c = best_bound(pulls_[at(i, j)], params);
      upper_[at(i, j)] = lower_[at(i, j)] = c;
      upper_[at(j, i)] = lower_[at(j, i)] = c;
    }
  }
}

void IntervalMatrix::set_uniform_offset(double c) {
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j) upper_[at(i, j)] = lower_[at(i, j)] = c;
}

std::int64_t IntervalMatrix::total_pulls() const {
  std::int64_t total = 0;
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) total += pulls_[at(i, j)];
  return total;
}

std::uint64_t IntervalMatrix::pulls_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      auto v = static_cast<std::uint64_t>(pulls_[at(i, j)]);
      for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    }
  }
  return h;
}

SquareMatrix IntervalMatrix::means() const {
  SquareMatrix m(k_, 0.5);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j) m(i, j) = mean_[at(i, j)];
  return m;
}

SquareMatrix IntervalMatrix::optimistic_matrix() const {
  SquareMatrix m(k_, 0.5);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j) m(i, j) = mean_[at(i, j)] + upper_[at(i, j)];
  return m;
}

}  // namespace kemeny
