#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kemeny {

using Arm = int;

/// Strict total order over arms {0..k-1}, best first.
class Ranking {
 public:
  /// Throws InvalidInput unless `order` is a permutation of {0..k-1}, k >= 1.
  explicit Ranking(std::vector<Arm> order);

  static Ranking identity(int k);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  std::span<const Arm> order() const noexcept { return order_; }
  Arm operator[](int position) const { return order_[static_cast<std::size_t>(position)]; }

  /// positions()[a] is the 0-based rank of arm a.
  std::vector<int> positions() const;

  bool prefers(Arm a, Arm b) const;

  Ranking reversed() const;

  /// 1-based labels joined by '>', e.g. "1>2>3".
  std::string to_string() const;

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<Arm> order_;
};

/// Number of unordered pairs ordered differently by a and b.
std::int64_t kendall_tau(const Ranking& a, const Ranking& b);

/// k(k-1)/2.
constexpr std::int64_t pair_count(int k) noexcept {
  return static_cast<std::int64_t>(k) * (k - 1) / 2;
}

}  // namespace kemeny
