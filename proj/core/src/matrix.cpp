#include "kemeny/matrix.hpp"

#include <cmath>

#include "kemeny/errors.hpp"

namespace kemeny {

SquareMatrix::SquareMatrix(int k, double fill) : k_(k) {
  if (k < 0) throw InvalidInput("matrix dimension must be non-negative");
  data_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), fill);
}

WinMatrix WinMatrix::from_entries(const SquareMatrix& q) {
  const int k = q.size();
  if (k < 1) throw InvalidInput("win matrix needs at least one arm");
  for (int i = 0; i < k; ++i) {
    if (q(i, i) != 0.5) throw InvalidInput("win matrix diagonal must be 0.5");
    for (int j = 0; j < k; ++j) {
      if (!(q(i, j) >= 0.0 && q(i, j) <= 1.0)) throw InvalidInput("win matrix entries must lie in [0, 1]");
      if (i != j && std::abs(q(i, j) + q(j, i) - 1.0) > kSymmetryTolerance) {
        throw InvalidInput("win matrix requires q_ij + q_ji = 1");
      }
    }
  }
  WinMatrix m;
  m.q_ = q;
  return m;
}

WinMatrix WinMatrix::from_counts(int k, std::int64_t denominator, std::span<const std::int64_t> counts) {
  if (k < 1) throw InvalidInput("win matrix needs at least one arm");
  if (denominator < 1) throw InvalidInput("denominator must be positive");
  if (counts.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw InvalidInput("count matrix has wrong size");
  }
  WinMatrix m;
  m.q_ = SquareMatrix(k, 0.5);
  m.denominator_ = denominator;
  m.counts_.assign(counts.begin(), counts.end());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto& c = m.counts_[static_cast<std::size_t>(i * k + j)];
      if (i == j) {
        c = 0;
        continue;
      }
      const auto cji = counts[static_cast<std::size_t>(j * k + i)];
      if (c < 0 || c + cji != denominator) throw InvalidInput("counts must satisfy c_ij + c_ji = n");
      m.q_(i, j) = static_cast<double>(c) / static_cast<double>(denominator);
    }
  }
  return m;
}

WinMatrix WinMatrix::indifferent(int k) {
  std::vector<std::int64_t> ones(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 1);
  return from_counts(k, 2, ones);
}

std::int64_t WinMatrix::count(int i, int j) const {
  if (!denominator_) throw InvalidInput("matrix carries no exact counts");
  if (i == j) throw InvalidInput("no count on the diagonal");
  return counts_.at(static_cast<std::size_t>(i * size() + j));
}

WinMatrix WinMatrix::transposed() const {
  const int k = size();
  WinMatrix t;
  t.q_ = SquareMatrix(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.q_(i, j) = q_(j, i);
  t.denominator_ = denominator_;
  if (denominator_) {
    t.counts_.resize(counts_.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t.counts_[static_cast<std::size_t>(i * k + j)] = counts_[static_cast<std::size_t>(j * k + i)];
  }
  return t;
}

double l1_distance(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("l1_distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t x = 0; x < a.data().size(); ++x) sum += std::abs(a.data()[x] - b.data()[x]);
  return sum;
}

}  // namespace kemeny
