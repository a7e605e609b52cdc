#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kemeny {

/// Dense row-major k x k matrix of doubles with no invariants.
/// Used for estimate-plus-offset matrices that may leave [0, 1].
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int k, double fill = 0.0);

  int size() const noexcept { return k_; }

  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
  }

  int k_ = 0;
  std::vector<double> data_;
};

/// Winning-probability matrix: q_ii = 1/2, q_ij + q_ji = 1, entries in [0, 1].
///
/// Matrices built from counts (a profile, or any rational data with a common
/// denominator) keep the integer numerators so that ties are resolved exactly.
class WinMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  /// Validates the invariants (symmetry to within kSymmetryTolerance).
  static WinMatrix from_entries(const SquareMatrix& q);

  /// q_ij = counts[i*k + j] / denominator. Requires counts(i,j) + counts(j,i) = denominator.
  /// Diagonal counts are ignored.
  static WinMatrix from_counts(int k, std::int64_t denominator, std::span<const std::int64_t> counts);

  /// All entries 1/2 (exact, denominator 2).
  static WinMatrix indifferent(int k);

  int size() const noexcept { return q_.size(); }
  double operator()(int i, int j) const { return q_(i, j); }
  const SquareMatrix& entries() const noexcept { return q_; }

  bool is_exact() const noexcept { return denominator_.has_value(); }
  /// Only meaningful when is_exact().
  std::int64_t denominator() const { return denominator_.value(); }
  std::int64_t count(int i, int j) const;

  WinMatrix transposed() const;

 private:
  SquareMatrix q_;
  std::optional<std::int64_t> denominator_;
  std::vector<std::int64_t> counts_;
};

/// Entrywise L1 distance over all k*k entries.
double l1_distance(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace kemeny
