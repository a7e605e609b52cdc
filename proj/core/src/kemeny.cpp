#include "kemeny/kemeny.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

void check_dims(int k, const Ranking& r, const char* what) {
  if (r.size() != k) throw InvalidInput(std::string(what) + ": ranking and matrix dimensions differ");
}

// penalty(a, b): cost of placing a above b, i.e. q_ba.
struct RealPenalty {
  const SquareMatrix& q;
  double operator()(int a, int b) const { return q(b, a); }
  static bool tied(double candidate, double best) { return candidate <= best + kScoreTieTolerance; }
};

struct CountPenalty {
  const WinMatrix& q;
  std::int64_t operator()(int a, int b) const { return q.count(b, a); }
  static bool tied(std::int64_t candidate, std::int64_t best) { return candidate <= best; }
};

template <typename Cost, typename Penalty>
Ranking dp_solve(int k, const Penalty& penalty, const Ranking& tiebreak) {
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<Cost> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Cost{});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) table[static_cast<std::size_t>(a * k + b)] = penalty(a, b);
  const Cost* pen = table.data();

  std::vector<Cost> row_total(static_cast<std::size_t>(k), Cost{});
  for (int e = 0; e < k; ++e)
    for (int j = 0; j < k; ++j)
      row_total[static_cast<std::size_t>(e)] += pen[e * k + j];

  // Appending e below the block S costs sum over j outside S and e of penalty(e, j).
  std::vector<Cost> placed(static_cast<std::size_t>(k));
  auto append_costs = [&](std::uint32_t set) {
    for (int e = 0; e < k; ++e) {
      if (set & (1u << e)) continue;
      Cost inside{};
      const Cost* row = pen + e * k;
      for (int j = 0; j < k; ++j)
        if (set & (1u << j)) inside += row[j];
      placed[static_cast<std::size_t>(e)] = row_total[static_cast<std::size_t>(e)] - inside;
    }
  };

  // rest[S]: least cost of ordering the arms outside S below the block S.
  std::vector<Cost> rest(static_cast<std::size_t>(full) + 1, Cost{});
  for (std::uint32_t set = full; set-- > 0;) {
    append_costs(set);
    bool first = true;
    Cost best{};
    for (int e = 0; e < k; ++e) {
      if (set & (1u << e)) continue;
      const Cost value = placed[static_cast<std::size_t>(e)] + rest[set | (1u << e)];
      if (first || value < best) {
        best = value;
        first = false;
      }
    }
    rest[set] = best;
  }

  std::vector<Arm> order;
  order.reserve(static_cast<std::size_t>(k));
  std::uint32_t set = 0;
  while (set != full) {
    append_costs(set);
    for (Arm e : tiebreak.order()) {
      if (set & (1u << e)) continue;
      const Cost value = placed[static_cast<std::size_t>(e)] + rest[set | (1u << e)];
      if (Penalty::tied(value, rest[set])) {
        order.push_back(e);
        set |= 1u << e;
        break;
      }
    }
  }
  return Ranking(std::move(order));
}

template <typename Cost, typename Penalty>
Ranking enumerate_solve(int k, const Penalty& penalty, const Ranking& tiebreak) {
  // Permutations of tiebreak positions in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  auto score_of = [&](const std::vector<int>& perm) {
    Cost s{};
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        s += penalty(tiebreak[perm[static_cast<std::size_t>(a)]], tiebreak[perm[static_cast<std::size_t>(b)]]);
    return s;
  };

  std::vector<Cost> scores;
  do {
    scores.push_back(score_of(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  const Cost best = *std::min_element(scores.begin(), scores.end());

  std::iota(idx.begin(), idx.end(), 0);
  std::size_t n = 0;
  do {
    if (Penalty::tied(scores[n++], best)) break;
  } while (std::next_permutation(idx.begin(), idx.end()));

  std::vector<Arm> order;
  for (int p : idx) order.push_back(tiebreak[p]);
  return Ranking(std::move(order));
}

}  // namespace

double kemeny_score(const SquareMatrix& q, const Ranking& r) {
  check_dims(q.size(), r, "kemeny_score");
  double score = 0.0;
  for (int a = 0; a < r.size(); ++a)
    for (int b = a + 1; b < r.size(); ++b) score += q(r[b], r[a]);
  return score;
}

double kemeny_score(const WinMatrix& q, const Ranking& r) {
  if (!q.is_exact()) return kemeny_score(q.entries(), r);
  check_dims(q.size(), r, "kemeny_score");
  std::int64_t total = 0;
  for (int a = 0; a < r.size(); ++a)
    for (int b = a + 1; b < r.size(); ++b) total += q.count(r[b], r[a]);
  return static_cast<double>(total) / static_cast<double>(q.denominator());
}

KemenyResult solve_kemeny(const SquareMatrix& q, const Ranking& tiebreak) {
  const int k = q.size();
  check_dims(k, tiebreak, "solve_kemeny");
  if (k > kSolverMaxArms) throw CapacityError("solve_kemeny supports at most 20 arms");
  Ranking r = dp_solve<double>(k, RealPenalty{q}, tiebreak);
  const double score = kemeny_score(q, r);
  return {std::move(r), score};
}

KemenyResult solve_kemeny(const WinMatrix& q, const Ranking& tiebreak) {
  if (!q.is_exact()) return solve_kemeny(q.entries(), tiebreak);
  const int k = q.size();
  check_dims(k, tiebreak, "solve_kemeny");
  if (k > kSolverMaxArms) throw CapacityError("solve_kemeny supports at most 20 arms");
  Ranking r = dp_solve<std::int64_t>(k, CountPenalty{q}, tiebreak);
  const double score = kemeny_score(q, r);
  return {std::move(r), score};
}

KemenyResult solve_kemeny(const WinMatrix& q) { return solve_kemeny(q, Ranking::identity(q.size())); }

KemenyResult brute_force_kemeny(const SquareMatrix& q, const Ranking& tiebreak) {
  const int k = q.size();
  check_dims(k, tiebreak, "brute_force_kemeny");
  if (k > kBruteForceMaxArms) throw CapacityError("brute_force_kemeny supports at most 8 arms");
  Ranking r = enumerate_solve<double>(k, RealPenalty{q}, tiebreak);
  const double score = kemeny_score(q, r);
  return {std::move(r), score};
}

KemenyResult brute_force_kemeny(const WinMatrix& q, const Ranking& tiebreak) {
  if (!q.is_exact()) return brute_force_kemeny(q.entries(), tiebreak);
  const int k = q.size();
  check_dims(k, tiebreak, "brute_force_kemeny");
  if (k > kBruteForceMaxArms) throw CapacityError("brute_force_kemeny supports at most 8 arms");
  Ranking r = enumerate_solve<std::int64_t>(k, CountPenalty{q}, tiebreak);
  const double score = kemeny_score(q, r);
  return {std::move(r), score};
}

}  // namespace kemeny
