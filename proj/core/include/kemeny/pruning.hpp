#pragma once

#include <cstddef>

#include "kemeny/interval_matrix.hpp"

namespace kemeny {

/// Upper offset of (i,j) becomes min(upper(i,j), lower(j,i)); both sides are then
/// tied together (lower(i,j) = upper(j,i)).
IntervalMatrix prune_symmetry(IntervalMatrix m);

/// Keeps mean + upper inside [0, 1]: upper <- min(upper, 1 - mean), then max(upper, -mean).
IntervalMatrix prune_clamp(IntervalMatrix m);

struct FixpointResult {
  IntervalMatrix matrix;
  std::size_t iterations;  ///< passes of the update, including the final unchanged one
};

inline constexpr std::size_t kMaxFixpointIterations = 1'000'000;

/// Triangle-inequality tightening iterated until no offset changes:
///   c'_ij = max(-mean_ij, round(min(c_ij, min_{l != i,j} mean_il + c_il + mean_lj + c_lj - mean_ij)))
/// Each pass reads only the previous pass's offsets.
FixpointResult triangle_fixpoint(IntervalMatrix m);
IntervalMatrix prune_triangle_fixpoint(IntervalMatrix m);

/// symmetry, clamp, then triangle fixpoint.
IntervalMatrix prune(IntervalMatrix m);

}  // namespace kemeny
