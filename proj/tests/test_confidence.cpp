#include <cmath>

#include "doctest.h"
#include "kemeny/confidence.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/interval_matrix.hpp"
#include "kemeny/oracles.hpp"
#include "test_util.hpp"

using namespace kemeny;

// Frozen oracle values, evaluated independently of the implementation.
//   y(k=4, delta=0.05) = ln 240 = 5.480638923
//   sqrt(ln 240 / 2192) = 0.0500029 -> 0.05000
//   x^2 y / 2 at k=4, rho=0.6 = 1096.128 -> 1097 per pair
//   sqrt(6 ln 600 / 100) = 0.6195287 -> 0.61953
//   sqrt(18 ln 600 / 1280) = 0.2999280 -> 0.29993
//   k=2, rho=1: 2 ln 40 = 7.378 -> 8
//   k=6, rho=1.5, n=10: (x^2 y n + 2n)/(2n + x^2 y) = 9.930 -> 10

TEST_CASE("parameters") {
  const auto p = PACParams::make(4, 0.6, 0.05);
  CHECK(p.x() == doctest::Approx(20.0));
  CHECK(p.y() == doctest::Approx(5.480638923));
  CHECK_FALSE(p.without_replacement());
  CHECK(PACParams::make(6, 1.5, 0.05).y() == doctest::Approx(6.396929655));
  CHECK_THROWS_AS(PACParams::make(1, 0.5, 0.05), InvalidInput);
  CHECK_THROWS_AS(PACParams::make(4, 0.0, 0.05), InvalidInput);
  CHECK_THROWS_AS(PACParams::make(4, 6.5, 0.05), InvalidInput);
  CHECK_NOTHROW(PACParams::make(4, 6.0, 0.05));
  CHECK_THROWS_AS(PACParams::make(4, 0.6, 0.0), InvalidInput);
  CHECK_THROWS_AS(PACParams::make(4, 0.6, 0.5), InvalidInput);
  CHECK_THROWS_AS(PACParams::make(4, 0.6, 0.05, 0), InvalidInput);
}

TEST_CASE("rounding") {
  CHECK(round_confidence(0.0500029) == 0.05);
  CHECK(round_confidence(0.123455) == doctest::Approx(0.12346).epsilon(1e-15));
  CHECK(round_confidence(0.123454) == doctest::Approx(0.12345).epsilon(1e-15));
  CHECK(round_confidence(-0.123455) == doctest::Approx(-0.12346).epsilon(1e-15));
  CHECK(round_confidence(0.0) == 0.0);
}

TEST_CASE("hoeffding bound") {
  const auto p = PACParams::make(4, 0.6, 0.05);
  CHECK(hoeffding_bound(1096, p) == 0.05);
  CHECK(hoeffding_bound(0, p) == kUnsampledOffset);
  CHECK(hoeffding_radius(400, p.y()) == doctest::Approx(hoeffding_radius(100, p.y()) / 2.0));
  CHECK(hoeffding_radius(1, 2.0) == doctest::Approx(1.0));
  CHECK(hoeffding_radius(3, 6.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(hoeffding_bound(-1, p), InvalidInput);
}

TEST_CASE("serfling bounds") {
  const auto p = PACParams::make(6, 1.5, 0.05, 10);
  CHECK(serfling_bound(5, 10, p) == doctest::Approx(0.61953).epsilon(1e-12));
  CHECK(serfling_reverse_bound(8, 10, p) == doctest::Approx(0.29993).epsilon(1e-12));
  CHECK(serfling_reverse_bound(10, 10, p) == 0.0);
  CHECK(serfling_bound(10, 10, p) == round_confidence(std::sqrt(p.y() / 200.0)));
  CHECK(serfling_bound(10, 10, p) > 0.0);
  CHECK_THROWS_AS(serfling_bound(11, 10, p), InvalidInput);
  CHECK_THROWS_AS(serfling_reverse_bound(11, 10, p), InvalidInput);
  CHECK(serfling_bound(0, 10, p) == kUnsampledOffset);

  // c' > c'' exactly when t > n/2 (the ratio is (n - t + 1) t / ((n - t)(t + 1))).
  for (std::int64_t n = 2; n <= 40; ++n) {
    for (std::int64_t t = 1; t < n; ++t) {
      const double fwd = serfling_radius(t, n, p.y());
      const double rev = serfling_reverse_radius(t, n, p.y());
      CHECK((fwd > rev) == (2 * t > n));
    }
  }
}

TEST_CASE("best bound dispatch") {
  const auto with = PACParams::make(6, 1.5, 0.05);
  const auto without = PACParams::make(6, 1.5, 0.05, 10);
  for (std::int64_t t = 1; t <= 10; ++t) {
    CHECK(best_bound(t, with) == hoeffding_bound(t, with));
    CHECK(best_bound(t, without) ==
          std::min(serfling_bound(t, 10, without), serfling_reverse_bound(t, 10, without)));
    if (2 * t <= 10) CHECK(best_bound(t, without) == serfling_bound(t, 10, without));
  }
  CHECK(best_bound(10, without) == 0.0);
  CHECK(best_bound(0, without) == 0.5);
  CHECK(best_bound(0, with) == 0.5);
}

TEST_CASE("sample sizes") {
  CHECK(sample_size_with_replacement(PACParams::make(4, 0.6, 0.05)) == 1097);
  CHECK(6 * sample_size_with_replacement(PACParams::make(4, 0.6, 0.05)) == 6582);
  CHECK(sample_size_with_replacement(PACParams::make(2, 1.0, 0.05)) == 8);
  const auto t1 = sample_size_with_replacement(PACParams::make(5, 0.8, 0.05));
  const auto t2 = sample_size_with_replacement(PACParams::make(5, 1.6, 0.05));
  CHECK(std::abs(static_cast<double>(t1) / 4.0 - static_cast<double>(t2)) <= 1.0);

  CHECK(sample_size_without_replacement(PACParams::make(6, 1.5, 0.05, 10)) == 10);
  const auto with = sample_size_with_replacement(PACParams::make(4, 0.6, 0.05));
  const auto huge = sample_size_without_replacement(PACParams::make(4, 0.6, 0.05, 1'000'000'000));
  CHECK(huge <= with);
  CHECK(huge >= with - 1);
  CHECK(sample_size_without_replacement(PACParams::make(3, 0.5, 0.05, 1)) == 1);
}

TEST_CASE("without replacement needs fewer samples when 2/n < rho") {
  for (int k = 2; k <= 8; ++k) {
    for (const std::int64_t n : {5, 10, 50, 200, 1000, 100000}) {
      for (const double frac : {0.05, 0.1, 0.3, 0.8}) {
        const double rho = frac * static_cast<double>(pair_count(k));
        if (2.0 / static_cast<double>(n) >= rho) continue;
        const auto with = sample_size_with_replacement(PACParams::make(k, rho, 0.05));
        const auto without = sample_size_without_replacement(PACParams::make(k, rho, 0.05, n));
        CHECK(without <= with);
        CHECK(without <= n);
      }
    }
  }
}

TEST_CASE("fixed sample sizes meet the bound") {
  for (int k = 2; k <= 7; ++k) {
    for (const double frac : {0.05, 0.1, 0.5}) {
      const double rho = frac * static_cast<double>(pair_count(k));
      const auto p = PACParams::make(k, rho, 0.05);
      const auto t = sample_size_with_replacement(p);
      CHECK(k * (k - 1) * hoeffding_radius(t, p.y()) <= rho + 1e-12);
      CHECK(k * (k - 1) * hoeffding_radius(t - 1, p.y()) > rho - 1e-12);
      for (const std::int64_t n : {7, 30, 500}) {
        const auto pn = PACParams::make(k, rho, 0.05, n);
        const auto tn = sample_size_without_replacement(pn);
        if (tn < n) CHECK(k * (k - 1) * offset_without_replacement(pn) <= rho + 1e-4);
      }
    }
  }
}

TEST_CASE("approximation bound") {
  IntervalMatrix zero(4);
  zero.set_uniform_offset(0.0);
  CHECK(approximation_bound(zero) == 0.0);
  IntervalMatrix sym(5);
  sym.set_uniform_offset(0.03);
  CHECK(approximation_bound(sym) == doctest::Approx(20 * 0.03));
  CHECK(approximation_bound(IntervalMatrix(4)) == doctest::Approx(12 * 0.5));
}

TEST_CASE("hoeffding intervals cover the truth with probability 1 - delta") {
  const int k = 4;
  const std::int64_t t = 200;
  const auto p = PACParams::make(k, 0.6, 0.05);
  const double c = hoeffding_radius(t, p.y());
  Rng rng(31);
  int violations = 0;
  const int runs = 1000;
  for (int run = 0; run < runs; ++run) {
    const auto truth = testutil::random_profile_matrix(k, 10, rng);
    BernoulliOracle oracle(truth, rng());
    bool bad = false;
    for (const auto pr : all_pairs(k)) {
      std::int64_t s = 0;
      for (std::int64_t d = 0; d < t; ++d) s += oracle.draw(pr.i, pr.j) ? 1 : 0;
      bad |= std::abs(static_cast<double>(s) / static_cast<double>(t) - truth(pr.i, pr.j)) > c;
    }
    violations += bad ? 1 : 0;
  }
  // Binomial(1000, 0.05) stays below 72 with probability > 0.999.
  CHECK(violations <= 72);
}

TEST_CASE("serfling intervals cover the truth with probability 1 - delta") {
  const int k = 4;
  const std::int64_t n = 20;
  const auto p = PACParams::make(k, 0.6, 0.05, n);
  Rng rng(32);
  for (const std::int64_t t : {3, 10, 16}) {
    const double c = std::min(serfling_radius(t, n, p.y()), serfling_reverse_radius(t, n, p.y()));
    int violations = 0;
    for (int run = 0; run < 1000; ++run) {
      VoterPool pool(gen_uniform_profile(k, n, rng), rng());
      bool bad = false;
      for (const auto pr : all_pairs(k)) {
        std::int64_t s = 0;
        for (std::int64_t d = 0; d < t; ++d) s += pool.draw(pr.i, pr.j) ? 1 : 0;
        bad |= std::abs(static_cast<double>(s) / static_cast<double>(t) - pool.truth()(pr.i, pr.j)) > c;
      }
      violations += bad ? 1 : 0;
    }
    CHECK(violations <= 72);
  }
}
