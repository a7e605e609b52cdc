#include "kemeny/confidence.hpp"

#include <algorithm>
#include <cmath>

#include "kemeny/errors.hpp"

namespace kemeny {

PACParams PACParams::make(int k, double rho, double delta, std::optional<std::int64_t> population) {
  if (k < 2) throw InvalidInput("PAC parameters need k >= 2");
  if (!(rho > 0.0 && rho <= static_cast<double>(pair_count(k)))) {
    throw InvalidInput("rho must lie in (0, k(k-1)/2]");
  }
  if (!(delta > 0.0 && delta < 0.5)) throw InvalidInput("delta must lie in (0, 0.5)");
  if (population && *population < 1) throw InvalidInput("population must be positive");
  PACParams p{k, rho, delta, population};
  if (!(p.y() > 1.0)) throw InvalidInput("y = ln(k(k-1)/delta) must exceed 1");
  return p;
}

double PACParams::x() const { return static_cast<double>(k) * (k - 1) / rho; }

double PACParams::y() const { return std::log(static_cast<double>(k) * (k - 1) / delta); }

double round_confidence(double c) {
  constexpr double scale = 1e5;
  const double magnitude = std::floor(std::abs(c) * scale + 0.5) / scale;
  return std::copysign(magnitude, c);
}

double hoeffding_radius(std::int64_t t, double y) {
  return std::sqrt(y / (2.0 * static_cast<double>(t)));
}

double serfling_radius(std::int64_t t, std::int64_t n, double y) {
  const auto td = static_cast<double>(t);
  const auto nd = static_cast<double>(n);
  return std::sqrt((nd - td + 1.0) * y / (2.0 * td * nd));
}

double serfling_reverse_radius(std::int64_t t, std::int64_t n, double y) {
  const auto td = static_cast<double>(t);
  const auto nd = static_cast<double>(n);
  return std::sqrt((nd - td) * (td + 1.0) * y / (2.0 * td * td * nd));
}

namespace {

void check_population_draws(std::int64_t t, std::int64_t n) {
  if (n < 1) throw InvalidInput("population must be positive");
  if (t < 0 || t > n) throw InvalidInput("sample count must lie in [0, n]");
}

}  // namespace

double hoeffding_bound(std::int64_t t, const PACParams& params) {
  if (t < 0) throw InvalidInput("negative sample count");
  if (t == 0) return kUnsampledOffset;
  return round_confidence(hoeffding_radius(t, params.y()));
}

double serfling_bound(std::int64_t t, std::int64_t n, const PACParams& params) {
  check_population_draws(t, n);
  if (t == 0) return kUnsampledOffset;
  return round_confidence(serfling_radius(t, n, params.y()));
}

double serfling_reverse_bound(std::int64_t t, std::int64_t n, const PACParams& params) {
  check_population_draws(t, n);
  if (t == 0) return kUnsampledOffset;
  return round_confidence(serfling_reverse_radius(t, n, params.y()));
}

double best_bound(std::int64_t t, const PACParams& params) {
  if (!params.population) return hoeffding_bound(t, params);
  const auto n = *params.population;
  return std::min(serfling_bound(t, n, params), serfling_reverse_bound(t, n, params));
}

std::int64_t sample_size_with_replacement(const PACParams& params) {
  const double x = params.x();
  return static_cast<std::int64_t>(std::ceil(x * x * params.y() / 2.0));
}

namespace {

bool small_population_branch(const PACParams& params) {
  const double xxy = params.x() * params.x() * params.y();
  return static_cast<double>(*params.population) < (xxy - 4.0) / 2.0;
}

}  // namespace

std::int64_t sample_size_without_replacement(const PACParams& params) {
  if (!params.population) throw InvalidInput("sample_size_without_replacement needs a population size");
  const auto n = *params.population;
  const auto nd = static_cast<double>(n);
  const double xxy = params.x() * params.x() * params.y();
  const double t = small_population_branch(params) ? (xxy * nd + 2.0 * nd) / (2.0 * nd + xxy)
                                                   : xxy * (nd + 1.0) / (2.0 * nd + xxy);
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(t)), 1, n);
}

double offset_without_replacement(const PACParams& params) {
  const auto t = sample_size_without_replacement(params);
  const auto n = *params.population;
  return small_population_branch(params) ? serfling_reverse_bound(t, n, params) : serfling_bound(t, n, params);
}

double approximation_bound(const IntervalMatrix& m) {
  double total = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) total += m.upper(i, j) + m.upper(j, i);
  return total;
}

}  // namespace kemeny
