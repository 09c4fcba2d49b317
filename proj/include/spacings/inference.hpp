#ifndef SPACINGS_INFERENCE_HPP
#define SPACINGS_INFERENCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spacings/detail/special_functions.hpp"
#include "spacings/distributions.hpp"
#include "spacings/rng.hpp"
#include "spacings/sampling.hpp"

// Distribution-free inference for the quantile x_p and the density f(x_p)
// from the spacing limit theory: the pivotal quantity
//   (X_{k:n} - x_p) / (sqrt(n) (X_{k+r:n} - X_{k-s:n}))
// converges to sqrt(p(1-p)) N / Gam(r+s) with N and the gamma independent,
// which is free of f(x_p).

namespace spacings::infer {

struct PivotTable {
  std::size_t r_plus_s = 0;
  double p = 0.5;
  double level = 0.95;
  double lower_q = 0.0, upper_q = 0.0;  // (1 -/+ level)/2 empirical quantiles
  std::size_t mc_size = 0;
  std::uint64_t seed = 0;
};

struct QuantileCI {
  double point = 0.0;
  double lower = 0.0, upper = 0.0;
  double level = 0.95;
  std::size_t r = 0, s = 0;
};

// Monte Carlo critical values of the limiting pivot law.
inline PivotTable pivot_quantiles(std::size_t r, std::size_t s, double p,
                                  double level, std::size_t mc_size,
                                  std::uint64_t seed) {
  if (r + s < 2)
    throw std::domain_error("pivot_quantiles: need r + s >= 2");
  if (mc_size < 100'000)
    throw std::domain_error("pivot_quantiles: need mc_size >= 1e5");
  if (!(p > 0.0 && p < 1.0) || !(level > 0.0 && level < 1.0))
    throw std::domain_error("pivot_quantiles: p, level must be in (0,1)");
  const double scale = std::sqrt(p * (1.0 - p));
  std::vector<double> draws(mc_size);
  for (std::size_t i = 0; i < mc_size; ++i) {
    RngStream rng = make_stream(seed, i);
    double g = 0.0;
    for (std::size_t j = 0; j < r + s; ++j) g += rng.exp1();
    draws[i] = scale * rng.normal() / g;
  }
  auto quantile_at = [&](double q) {
    std::size_t idx = static_cast<std::size_t>(
        std::min(q * static_cast<double>(mc_size),
                 static_cast<double>(mc_size - 1)));
    std::nth_element(draws.begin(),
                     draws.begin() + static_cast<std::ptrdiff_t>(idx),
                     draws.end());
    return draws[idx];
  };
  PivotTable t;
  t.r_plus_s = r + s;
  t.p = p;
  t.level = level;
  t.mc_size = mc_size;
  t.seed = seed;
  t.lower_q = quantile_at((1.0 - level) / 2.0);
  t.upper_q = quantile_at((1.0 + level) / 2.0);
  return t;
}

// Asymptotically distribution-free CI for x_p from one window.
inline QuantileCI quantile_ci(const WindowSample& w, double p, double level,
                              const PivotTable& table) {
  if (table.r_plus_s != w.r + w.s)
    throw std::domain_error("quantile_ci: table r+s mismatch");
  double range = w.values.back() - w.values.front();
  if (!(range > 0.0))
    throw std::domain_error("quantile_ci: degenerate window range");
  double scaled = std::sqrt(static_cast<double>(w.n)) * range;
  QuantileCI ci;
  ci.point = w.center();
  ci.level = level;
  ci.r = w.r;
  ci.s = w.s;
  ci.lower = w.center() - table.upper_q * scaled;
  ci.upper = w.center() - table.lower_q * scaled;
  if (ci.lower > ci.upper) std::swap(ci.lower, ci.upper);
  (void)p;
  return ci;
}

struct DensityEstimate {
  double estimate = 0.0;
  double lower = 0.0, upper = 0.0;
  double level = 0.95;
};

// n f(x_p) (X_{k+r:n} - X_{k-s:n}) is asymptotically Gam(r+s); the
// (r+s-1) numerator makes the inverse-gamma mean come out at f(x_p).
inline DensityEstimate density_estimate(const WindowSample& w,
                                        double level = 0.95) {
  if (w.r + w.s < 2)
    throw std::domain_error("density_estimate: need r + s >= 2");
  double range = w.values.back() - w.values.front();
  if (!(range > 0.0))
    throw std::domain_error("density_estimate: degenerate window range");
  const double m = static_cast<double>(w.r + w.s);
  const double n_range = static_cast<double>(w.n) * range;
  DensityEstimate est;
  est.estimate = (m - 1.0) / n_range;
  est.level = level;
  est.lower = special::gamma_quantile(m, (1.0 - level) / 2.0) / n_range;
  est.upper = special::gamma_quantile(m, (1.0 + level) / 2.0) / n_range;
  return est;
}

struct CoverageConfig {
  Distribution dist = Distribution::uniform();
  std::size_t n = 10'000;
  double p = 0.5;
  std::size_t r = 10, s = 10;
  double level = 0.95;
  std::size_t n_rep = 4000;
  std::uint64_t seed = 0;
  std::size_t pivot_mc_size = 200'000;
};

struct CoverageReport {
  std::string parent;
  std::size_t n = 0;
  double p = 0.5;
  std::size_t r = 0, s = 0;
  double level = 0.95;
  double coverage = 0.0;
  double se = 0.0;  // binomial standard error of the hit rate
  std::size_t n_rep = 0;
  std::uint64_t seed = 0;
};

inline CoverageReport coverage_experiment(const CoverageConfig& cfg) {
  if (cfg.n_rep == 0)
    throw std::invalid_argument("coverage_experiment: n_rep must be >= 1");
  if (!(cfg.p > 0.0 && cfg.p < 1.0))
    throw std::invalid_argument("coverage_experiment: p outside (0,1)");
  const std::size_t k = static_cast<std::size_t>(
      std::lround(cfg.p * static_cast<double>(cfg.n)));
  if (k <= cfg.s || k + cfg.r > cfg.n)
    throw std::invalid_argument("coverage_experiment: window exceeds sample");
  PivotTable table = pivot_quantiles(cfg.r, cfg.s, cfg.p, cfg.level,
                                     cfg.pivot_mc_size, cfg.seed ^ 0x9e37);
  const double x_p = cfg.dist.quantile(cfg.p);
  std::size_t hits = 0;
  for (std::size_t rep = 0; rep < cfg.n_rep; ++rep) {
    RngStream rng = make_stream(cfg.seed, rep);
    WindowSample w = sample_window(cfg.dist, cfg.n, k, cfg.r, cfg.s,
                                   WindowMethod::BetaPivot, rng);
    QuantileCI ci = quantile_ci(w, cfg.p, cfg.level, table);
    if (ci.lower <= x_p && x_p <= ci.upper) ++hits;
  }
  CoverageReport rep;
  rep.parent = cfg.dist.name();
  rep.n = cfg.n;
  rep.p = cfg.p;
  rep.r = cfg.r;
  rep.s = cfg.s;
  rep.level = cfg.level;
  rep.n_rep = cfg.n_rep;
  rep.seed = cfg.seed;
  rep.coverage = static_cast<double>(hits) / static_cast<double>(cfg.n_rep);
  rep.se = std::sqrt(rep.coverage * (1.0 - rep.coverage) /
                     static_cast<double>(cfg.n_rep));
  return rep;
}

}  // namespace spacings::infer

#endif  // SPACINGS_INFERENCE_HPP
