#pragma once

#include "kemeny/matrix.hpp"
#include "kemeny/ranking.hpp"

namespace kemeny {

inline constexpr int kSolverMaxArms = 20;
inline constexpr int kBruteForceMaxArms = 8;

/// Tolerance for treating two real-valued scores as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

struct KemenyResult {
  Ranking ranking;
  double score;  ///< Kemeny score against the matrix that was solved.
};

/// K(Q, r) = sum over (i above j in r) of q_ji. Accepts any square matrix.
double kemeny_score(const SquareMatrix& q, const Ranking& r);
/// Exact integer summation when q carries counts.
double kemeny_score(const WinMatrix& q, const Ranking& r);

/// Exact Kemeny ranking by dynamic programming over subsets of arms placed on top.
///
/// Among optimal rankings the result is the first one in lexicographic order of
/// tiebreak positions read top-down: at each position the earliest arm of
/// `tiebreak` that can still complete an optimal ranking is placed. Throws
/// CapacityError for k > kSolverMaxArms.
KemenyResult solve_kemeny(const SquareMatrix& q, const Ranking& tiebreak);
KemenyResult solve_kemeny(const WinMatrix& q, const Ranking& tiebreak);
KemenyResult solve_kemeny(const WinMatrix& q);

/// Enumerates all k! rankings; same contract as solve_kemeny. k <= kBruteForceMaxArms.
KemenyResult brute_force_kemeny(const SquareMatrix& q, const Ranking& tiebreak);
KemenyResult brute_force_kemeny(const WinMatrix& q, const Ranking& tiebreak);

}  // namespace kemeny
