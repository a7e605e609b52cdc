#include "kemeny/pruning.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kemeny/confidence.hpp"

namespace kemeny {

IntervalMatrix prune_symmetry(IntervalMatrix m) {
  const int k = m.size();
  IntervalMatrix out = m;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) out.set_upper(i, j, std::min(m.upper(i, j), m.lower(j, i)));
  out.sync_lower_from_upper();
  return out;
}

IntervalMatrix prune_clamp(IntervalMatrix m) {
  const int k = m.size();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const double q = m.mean(i, j);
      m.set_upper(i, j, std::max(-q, std::min(m.upper(i, j), 1.0 - q)));
    }
  }
  m.sync_lower_from_upper();
  return m;
}

FixpointResult triangle_fixpoint(IntervalMatrix m) {
  const int k = m.size();
  IntervalMatrix next = m;
  for (std::size_t iteration = 1; iteration <= kMaxFixpointIterations; ++iteration) {
    bool changed = false;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const double q_ij = m.mean(i, j);
        double via = std::numeric_limits<double>::infinity();
        for (int l = 0; l < k; ++l) {
          if (l == i || l == j) continue;
          via = std::min(via, m.mean(i, l) + m.upper(i, l) + m.mean(l, j) + m.upper(l, j) - q_ij);
        }
        double c = m.upper(i, j);
        if (via < c) c = round_confidence(via);
        c = std::max(-q_ij, std::min(c, m.upper(i, j)));
        if (c != m.upper(i, j)) changed = true;
        next.set_upper(i, j, c);
      }
    }
    if (!changed) {
      m.sync_lower_from_upper();
      return {std::move(m), iteration};
    }
    m = next;
  }
  throw std::logic_error("triangle pruning did not reach a fixpoint");
}

IntervalMatrix prune_triangle_fixpoint(IntervalMatrix m) { return triangle_fixpoint(std::move(m)).matrix; }

IntervalMatrix prune(IntervalMatrix m) {
  return prune_triangle_fixpoint(prune_clamp(prune_symmetry(std::move(m))));
}

}  // namespace kemeny
