#include "kemeny/ranking.hpp"

#include <algorithm>

#include "kemeny/errors.hpp"

namespace kemeny {

Ranking::Ranking(std::vector<Arm> order) : order_(std::move(order)) {
  if (order_.empty()) throw InvalidInput("ranking must contain at least one arm");
  std::vector<bool> seen(order_.size(), false);
  for (Arm a : order_) {
    if (a < 0 || a >= size() || seen[static_cast<std::size_t>(a)]) {
      throw InvalidInput("ranking is not a permutation of 0..k-1");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Ranking Ranking::identity(int k) {
  std::vector<Arm> order(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  return Ranking(std::move(order));
}

std::vector<int> Ranking::positions() const {
  std::vector<int> pos(order_.size());
  for (int p = 0; p < size(); ++p) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
  return pos;
}

bool Ranking::prefers(Arm a, Arm b) const {
  const auto pos = positions();
  return pos.at(static_cast<std::size_t>(a)) < pos.at(static_cast<std::size_t>(b));
}

Ranking Ranking::reversed() const {
  return Ranking(std::vector<Arm>(order_.rbegin(), order_.rend()));
}

std::string Ranking::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (p) out += '>';
    out += std::to_string(order_[p] + 1);
  }
  return out;
}

std::int64_t kendall_tau(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw InvalidInput("kendall_tau: rankings over different arm counts");
  // Walk a top-down; count pairs whose order b reverses.
  const auto pos_b = b.positions();
  std::int64_t inversions = 0;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = x + 1; y < a.size(); ++y) {
      if (pos_b[static_cast<std::size_t>(a[x])] > pos_b[static_cast<std::size_t>(a[y])]) ++inversions;
    }
  }
  return inversions;
}

}  // namespace kemeny
