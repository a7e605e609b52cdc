#include <cmath>
#include <map>

#include "doctest.h"
#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/preferences.hpp"
#include "test_util.hpp"

using namespace kemeny;

namespace {

Ranking R(std::vector<Arm> order) { return Ranking(std::move(order)); }

// Borda realisability by enumerating every subset.
bool borda_oracle(const WinMatrix& q) {
  const int k = q.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    double total = 0.0;
    int a = 0;
    for (int i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      ++a;
      for (int j = 0; j < k; ++j) {
        if (j != i) total += q(i, j);
      }
    }
    if (total > a * (k - (a + 1) / 2.0) + 1e-9) return false;
  }
  return true;
}

double marginal(const PreferenceProfile& p, Arm i, Arm j) { return profile_to_matrix(p)(i, j); }

}  // namespace

TEST_CASE("profile to matrix: two profiles, one matrix") {
  const PreferenceProfile p1({R({0, 1, 2}), R({0, 1, 2}), R({2, 1, 0})});
  const PreferenceProfile p2({R({0, 1, 2}), R({1, 0, 2}), R({2, 0, 1})});
  const auto q1 = profile_to_matrix(p1);
  const auto q2 = profile_to_matrix(p2);
  CHECK(q1.entries() == q2.entries());
  CHECK(q1.is_exact());
  CHECK(q1.denominator() == 3);
  CHECK(q1.count(0, 1) == 2);
  CHECK(q1(0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(q1(0, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(q1(1, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(q1(1, 1) == 0.5);

  const auto single = profile_to_matrix(PreferenceProfile({R({0, 1})}));
  CHECK(single(0, 1) == 1.0);
  CHECK(single(1, 0) == 0.0);

  CHECK_THROWS_AS(PreferenceProfile({}), InvalidInput);
  CHECK_THROWS_AS(PreferenceProfile({R({0, 1}), R({0, 1, 2})}), InvalidInput);
}

TEST_CASE("completeness") {
  const auto ex1 = testutil::matrix_from_upper(3, 3, {2, 2, 2});
  CHECK(check_completeness(ex1, 3));
  CHECK(check_completeness(ex1, 6));
  CHECK_FALSE(check_completeness(ex1, 2));
  SquareMatrix half(3, 0.5);
  const auto h = WinMatrix::from_entries(half);
  CHECK_FALSE(check_completeness(h, 3));
  CHECK(check_completeness(h, 2));
  CHECK(check_completeness(WinMatrix::indifferent(4), 2));
  CHECK_FALSE(check_completeness(WinMatrix::indifferent(4), 3));
  CHECK_FALSE(check_completeness(h, 0));
}

TEST_CASE("triangle check") {
  SquareMatrix q(3, 0.5);
  q(0, 2) = 1.0;
  q(2, 0) = 0.0;
  q(0, 1) = 0.0;
  q(1, 0) = 1.0;
  q(1, 2) = 0.0;
  q(2, 1) = 1.0;
  const auto bad = check_triangle(WinMatrix::from_entries(q));
  CHECK(std::find(bad.begin(), bad.end(), Triple{0, 1, 2}) != bad.end());
  CHECK(check_triangle(WinMatrix::indifferent(5)).empty());
}

TEST_CASE("borda realisability") {
  const auto ex1 = testutil::matrix_from_upper(3, 3, {2, 2, 2});
  CHECK(check_borda_realisability(ex1));
  const auto dom = testutil::matrix_from_upper(3, 1, {1, 1, 1});
  CHECK(check_borda_realisability(dom));
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 6));
    const auto q = testutil::random_real_matrix(k, rng);
    CHECK(check_borda_realisability(q) == borda_oracle(q));
    CHECK(borda_violations(q).empty() == borda_oracle(q));
  }
}

TEST_CASE("generated profiles pass every realisability check") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 7));
    const auto n = 1 + static_cast<std::int64_t>(uniform_below(rng, 20));
    const PreferenceProfile profiles[] = {
        gen_uniform_profile(k, n, rng),
        gen_mallows_profile(k, n, 0.05 + 0.95 * uniform01(rng), Ranking::identity(k), rng),
        gen_single_peaked_profile(k, n, rng),
    };
    for (const auto& p : profiles) {
      const auto q = profile_to_matrix(p);
      CHECK(check_completeness(q, n));
      CHECK(check_triangle(q).empty());
      CHECK(check_borda_realisability(q));
    }
  }
}

TEST_CASE("generators are deterministic and handle k = 1") {
  Rng a(5), b(5);
  CHECK(gen_uniform_profile(5, 30, a).rankings() == gen_uniform_profile(5, 30, b).rankings());
  CHECK(gen_mallows_profile(5, 30, 0.4, Ranking::identity(5), a).rankings() ==
        gen_mallows_profile(5, 30, 0.4, Ranking::identity(5), b).rankings());
  CHECK(gen_single_peaked_profile(5, 30, a).rankings() == gen_single_peaked_profile(5, 30, b).rankings());
  for (const auto& p : {gen_uniform_profile(1, 4, a), gen_single_peaked_profile(1, 4, a),
                        gen_mallows_profile(1, 4, 0.5, Ranking::identity(1), a)}) {
    CHECK(p.voters() == 4);
    for (const auto& r : p.rankings()) CHECK(r == Ranking::identity(1));
  }
  CHECK_THROWS_AS(gen_mallows_profile(3, 4, 0.0, Ranking::identity(3), a), InvalidInput);
  CHECK_THROWS_AS(gen_mallows_profile(3, 4, 1.5, Ranking::identity(3), a), InvalidInput);
  CHECK_THROWS_AS(gen_mallows_profile(3, 4, 0.5, Ranking::identity(4), a), InvalidInput);
  CHECK_THROWS_AS(gen_uniform_profile(3, 0, a), InvalidInput);
}

TEST_CASE("uniform generator marginals") {
  Rng rng(1);
  const auto p = gen_uniform_profile(4, 100000, rng);
  const auto q = profile_to_matrix(p);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) CHECK(std::abs(q(i, j) - 0.5) < 0.01);
    }
  }
  std::map<std::vector<Arm>, int> freq;
  for (const auto& r : p.rankings()) ++freq[{r.order().begin(), r.order().end()}];
  CHECK(freq.size() == 24);
  for (const auto& [order, c] : freq) CHECK(std::abs(c / 100000.0 - 1.0 / 24.0) < 0.005);
}

TEST_CASE("mallows generator") {
  Rng rng(2);
  const auto ref = R({2, 0, 3, 1});
  const auto flat = gen_mallows_profile(4, 100000, 1.0, ref, rng);
  const auto q = profile_to_matrix(flat);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) CHECK(std::abs(q(i, j) - 0.5) < 0.02);
  }
  const auto sharp = gen_mallows_profile(5, 1000, 1e-6, ref.size() == 4 ? Ranking::identity(5) : ref, rng);
  for (const auto& r : sharp.rankings()) CHECK(r == Ranking::identity(5));
  const auto centred = gen_mallows_profile(4, 200, 1e-9, ref, rng);
  for (const auto& r : centred.rankings()) CHECK(r == ref);

  // k = 2: agreement with the reference has weight 1, disagreement phi.
  const auto two = gen_mallows_profile(2, 100000, 0.2, Ranking::identity(2), rng);
  CHECK(std::abs(marginal(two, 0, 1) - 1.0 / 1.2) < 0.01);

  // Probability of a ranking is proportional to phi^(distance to reference).
  const double phi = 0.5;
  const auto p = gen_mallows_profile(3, 200000, phi, Ranking::identity(3), rng);
  double z = 0.0;
  for (const auto& r : testutil::all_rankings(3)) z += std::pow(phi, kendall_tau(r, Ranking::identity(3)));
  std::map<std::vector<Arm>, int> freq;
  for (const auto& r : p.rankings()) ++freq[{r.order().begin(), r.order().end()}];
  for (const auto& r : testutil::all_rankings(3)) {
    const double expect = std::pow(phi, kendall_tau(r, Ranking::identity(3))) / z;
    CHECK(std::abs(freq[{r.order().begin(), r.order().end()}] / 200000.0 - expect) < 0.005);
  }
}

TEST_CASE("single-peaked generator") {
  Rng rng(3);
  const auto p = gen_single_peaked_profile(3, 100000, rng);
  std::map<std::vector<Arm>, int> freq;
  for (const auto& r : p.rankings()) {
    CHECK(is_single_peaked(r));
    ++freq[{r.order().begin(), r.order().end()}];
  }
  CHECK(freq.size() == 4);
  for (const auto& [order, c] : freq) CHECK(std::abs(c / 100000.0 - 0.25) < 0.02);

  const auto two = gen_single_peaked_profile(2, 100000, rng);
  CHECK(std::abs(marginal(two, 0, 1) - 0.5) < 0.01);

  int single_peaked = 0;
  for (const auto& r : testutil::all_rankings(5)) single_peaked += is_single_peaked(r) ? 1 : 0;
  CHECK(single_peaked == 16);
  CHECK(is_single_peaked(R({2, 1, 3, 0, 4})));
  CHECK_FALSE(is_single_peaked(R({0, 2, 1})));
}

TEST_CASE("permuting voters leaves the matrix unchanged") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto voters = gen_uniform_profile(5, 15, rng).rankings();
    const auto before = profile_to_matrix(PreferenceProfile(voters));
    shuffle(std::span<Ranking>(voters), rng);
    CHECK(profile_to_matrix(PreferenceProfile(voters)).entries() == before.entries());
  }
}

TEST_CASE("dominance fixture") {
  const auto [q, qt] = fixture_lemma2(3, 0.006);
  CHECK(q(0, 1) == doctest::Approx(0.5005));
  CHECK(qt(0, 1) == doctest::Approx(0.4995));
  CHECK(l1_distance(q.entries(), qt.entries()) == doctest::Approx(0.006));
  CHECK(solve_kemeny(q).ranking == R({0, 1, 2}));
  CHECK(solve_kemeny(qt).ranking == R({2, 1, 0}));
  CHECK(kendall_tau(solve_kemeny(q).ranking, solve_kemeny(qt).ranking) == 3);
}

TEST_CASE("split-profile fixture") {
  for (int k = 3; k <= 6; ++k) {
    for (std::int64_t n = 3; n <= 10; ++n) {
      const auto [p, p_minus] = fixture_lemma3(k, n);
      CHECK(p.voters() == n);
      CHECK(p_minus.voters() == n - 1);
      const auto a = solve_kemeny(profile_to_matrix(p)).ranking;
      const auto b = solve_kemeny(profile_to_matrix(p_minus)).ranking;
      CHECK(kendall_tau(a, b) == pair_count(k));
      if (n % 2 == 0) {
        CHECK(profile_to_matrix(p).entries() == WinMatrix::indifferent(k).entries());
        CHECK(l1_distance(profile_to_matrix(p).entries(), profile_to_matrix(p_minus).entries()) ==
              doctest::Approx(k * (k - 1) / (2.0 * static_cast<double>(n - 1))));
      }
    }
  }
}

TEST_CASE("fixture preconditions") {
  CHECK_THROWS_AS(fixture_lemma3(2, 4), InvalidInput);
  CHECK_THROWS_AS(fixture_lemma3(3, 2), InvalidInput);
  CHECK_THROWS_AS(fixture_lemma2(3, 0.0), InvalidInput);
  CHECK_THROWS_AS(fixture_lemma2(3, 3.0), InvalidInput);
}
