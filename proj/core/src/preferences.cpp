#include "kemeny/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kemeny/errors.hpp"

namespace kemeny {

PreferenceProfile::PreferenceProfile(std::vector<Ranking> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw InvalidInput("profile needs at least one voter");
  const int k = voters_.front().size();
  for (const auto& v : voters_)
    if (v.size() != k) throw InvalidInput("all voters must rank the same arms");
}

WinMatrix profile_to_matrix(const PreferenceProfile& p) {
  const int k = p.arms();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k * k), 0);
  for (const auto& voter : p.rankings()) {
    const auto order = voter.order();
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) ++counts[static_cast<std::size_t>(order[a] * k + order[b])];
  }
  return WinMatrix::from_counts(k, p.voters(), counts);
}

bool check_completeness(const WinMatrix& q, std::int64_t n) {
  if (n < 1) return false;
  const int k = q.size();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (q.is_exact()) {
        if ((q.count(i, j) * n) % q.denominator() != 0) return false;
        continue;
      }
      const double scaled = q(i, j) * static_cast<double>(n);
      if (std::abs(scaled - std::round(scaled)) > kValidityTolerance) return false;
      if (std::abs(q(i, j) + q(j, i) - 1.0) > kValidityTolerance) return false;
    }
  }
  return true;
}

std::vector<Triple> check_triangle(const WinMatrix& q) {
  const int k = q.size();
  std::vector<Triple> bad;
  for (int l = 0; l < k; ++l) {
    for (int j = 0; j < k; ++j) {
      if (j == l) continue;
      for (int i = 0; i < k; ++i) {
        if (i == l || i == j) continue;
        const bool violated = q.is_exact() ? q.count(l, j) + q.count(j, i) < q.count(l, i)
                                           : q(l, j) + q(j, i) < q(l, i) - kValidityTolerance;
        if (violated) bad.push_back({l, j, i});
      }
    }
  }
  return bad;
}

std::vector<BordaViolation> borda_violations(const WinMatrix& q) {
  const int k = q.size();
  std::vector<double> rows(static_cast<std::size_t>(k), 0.0);
  std::vector<std::int64_t> exact_rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      rows[static_cast<std::size_t>(i)] += q(i, j);
      if (q.is_exact()) exact_rows[static_cast<std::size_t>(i)] += q.count(i, j);
    }
  }
  std::vector<Arm> by_row(static_cast<std::size_t>(k));
  std::iota(by_row.begin(), by_row.end(), 0);
  std::stable_sort(by_row.begin(), by_row.end(), [&](Arm a, Arm b) {
    return q.is_exact() ? exact_rows[static_cast<std::size_t>(a)] > exact_rows[static_cast<std::size_t>(b)]
                        : rows[static_cast<std::size_t>(a)] > rows[static_cast<std::size_t>(b)];
  });

  std::vector<BordaViolation> bad;
  double total = 0.0;
  std::int64_t exact_total = 0;
  for (int a = 1; a <= k; ++a) {
    const Arm arm = by_row[static_cast<std::size_t>(a - 1)];
    total += rows[static_cast<std::size_t>(arm)];
    exact_total += exact_rows[static_cast<std::size_t>(arm)];
    const double bound = a * (k - (a + 1) / 2.0);
    // 2 * bound = a(2k - a - 1) is integral, so the exact test needs no division.
    const bool violated =
        q.is_exact() ? 2 * exact_total > q.denominator() * static_cast<std::int64_t>(a) * (2 * k - a - 1)
                     : total > bound + kValidityTolerance;
    if (violated) {
      bad.push_back({std::vector<Arm>(by_row.begin(), by_row.begin() + a), total, bound});
    }
  }
  return bad;
}

bool check_borda_realisability(const WinMatrix& q) { return borda_violations(q).empty(); }

PreferenceProfile gen_uniform_profile(int k, std::int64_t n, Rng& rng) {
  if (k < 1 || n < 1) throw InvalidInput("gen_uniform_profile: k and n must be positive");
  std::vector<Ranking> voters;
  voters.reserve(static_cast<std::size_t>(n));
  std::vector<Arm> order(static_cast<std::size_t>(k));
  for (std::int64_t v = 0; v < n; ++v) {
    std::iota(order.begin(), order.end(), 0);
    shuffle(std::span<Arm>(order), rng);
    voters.emplace_back(order);
  }
  return PreferenceProfile(std::move(voters));
}

PreferenceProfile gen_mallows_profile(int k, std::int64_t n, double phi, const Ranking& reference, Rng& rng) {
  if (k < 1 || n < 1) throw InvalidInput("gen_mallows_profile: k and n must be positive");
  if (!(phi > 0.0 && phi <= 1.0)) throw InvalidInput("gen_mallows_profile: phi must lie in (0, 1]");
  if (reference.size() != k) throw InvalidInput("gen_mallows_profile: reference has wrong arm count");

  // weights[d] = phi^d
  std::vector<double> weights(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) weights[static_cast<std::size_t>(d)] = std::pow(phi, d);

  std::vector<Ranking> voters;
  voters.reserve(static_cast<std::size_t>(n));
  std::vector<Arm> partial;
  partial.reserve(static_cast<std::size_t>(k));
  for (std::int64_t v = 0; v < n; ++v) {
    partial.clear();
    for (int m = 1; m <= k; ++m) {
      double mass = 0.0;
      for (int d = 0; d < m; ++d) mass += weights[static_cast<std::size_t>(d)];
      double u = uniform01(rng) * mass;
      int d = 0;
      for (; d < m - 1; ++d) {
        u -= weights[static_cast<std::size_t>(d)];
        if (u < 0.0) break;
      }
      partial.insert(partial.begin() + (m - 1 - d), reference[m - 1]);
    }
    voters.emplace_back(partial);
  }
  return PreferenceProfile(std::move(voters));
}

PreferenceProfile gen_single_peaked_profile(int k, std::int64_t n, Rng& rng) {
  if (k < 1 || n < 1) throw InvalidInput("gen_single_peaked_profile: k and n must be positive");
  std::vector<Ranking> voters;
  voters.reserve(static_cast<std::size_t>(n));
  std::vector<Arm> bottom_up;
  for (std::int64_t v = 0; v < n; ++v) {
    bottom_up.clear();
    int left = 0;
    int right = k - 1;
    while (left < right) bottom_up.push_back((rng() >> 63) ? left++ : right--);
    bottom_up.push_back(left);
    voters.emplace_back(std::vector<Arm>(bottom_up.rbegin(), bottom_up.rend()));
  }
  return PreferenceProfile(std::move(voters));
}

bool is_single_peaked(const Ranking& r) {
  int lo = r[0];
  int hi = r[0];
  for (int p = 1; p < r.size(); ++p) {
    const Arm a = r[p];
    if (a == lo - 1) {
      lo = a;
    } else if (a == hi + 1) {
      hi = a;
    } else {
      return false;
    }
  }
  return true;
}

std::pair<WinMatrix, WinMatrix> fixture_lemma2(int k, double epsilon) {
  if (k < 2) throw InvalidInput("fixture_lemma2: needs k >= 2");
  if (!(epsilon > 0.0 && epsilon < static_cast<double>(pair_count(k)))) {
    throw InvalidInput("fixture_lemma2: epsilon must lie in (0, k(k-1)/2)");
  }
  const double d = epsilon / static_cast<double>(k * (k - 1));
  SquareMatrix q(k, 0.5);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) q(i, j) = j > i ? (1.0 + d) / 2.0 : (1.0 - d) / 2.0;
  auto dominant = WinMatrix::from_entries(q);
  auto flipped = dominant.transposed();
  return {std::move(dominant), std::move(flipped)};
}

std::pair<PreferenceProfile, PreferenceProfile> fixture_lemma3(int k, std::int64_t n) {
  if (k <= 2 || n <= 2) throw InvalidInput("fixture_lemma3: needs k > 2 and n > 2");
  const Ranking forward = Ranking::identity(k);
  const Ranking backward = forward.reversed();
  const std::int64_t n_forward = n / 2;
  const std::int64_t n_backward = n - n_forward;

  auto build = [&](std::int64_t f, std::int64_t b) {
    std::vector<Ranking> voters(static_cast<std::size_t>(f), forward);
    voters.insert(voters.end(), static_cast<std::size_t>(b), backward);
    return PreferenceProfile(std::move(voters));
  };
  if (n % 2 == 0) return {build(n_forward, n_backward), build(n_forward - 1, n_backward)};
  return {build(n_forward, n_backward), build(n_forward, n_backward - 1)};
}

}  // namespace kemeny
