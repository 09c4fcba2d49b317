#include "spacings/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "spacings/stats_tests.hpp"

using namespace spacings;
using laws::LimitLaw;

namespace {
constexpr std::uint64_t kSeed = 0x5eed0002;
}

TEST_CASE("scalar limit cdfs") {
  REQUIRE(laws::limit_cdf(LimitLaw::gumbel_g(), 0.0) ==
          Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  REQUIRE(laws::limit_cdf(LimitLaw::frechet_g(2.0), 1.0) ==
          Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  REQUIRE(laws::limit_cdf(LimitLaw::exp_max(2), std::log(2.0)) ==
          Catch::Approx(0.25).epsilon(1e-13));
  REQUIRE_THROWS_AS(laws::limit_cdf(LimitLaw::gumbel_w_vector(3), 0.0),
                    std::invalid_argument);
}

TEST_CASE("exp-max cdf against brute-force MC") {
  const std::size_t reps = 200'000;
  double x = std::log(2.0);
  std::size_t below = 0;
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed, i);
    double m = std::max(rng.exp1(), rng.exp1());
    if (m <= x) ++below;
  }
  double se = std::sqrt(0.25 * 0.75 / reps);
  REQUIRE(static_cast<double>(below) / reps ==
          Catch::Approx(0.25).margin(3.0 * se));
}

TEST_CASE("gumbel W-vector spacings have means 1/j") {
  const std::size_t reps = 1'000'000;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed + 1, i);
    auto w = laws::sample_limit(LimitLaw::gumbel_w_vector(3), rng);
    m1 += w[0] - w[1];
    m2 += w[1] - w[2];
  }
  double se = 1.5 / std::sqrt(static_cast<double>(reps));
  REQUIRE(m1 / reps == Catch::Approx(1.0).margin(3.0 * se));
  REQUIRE(m2 / reps == Catch::Approx(0.5).margin(3.0 * se));
}

TEST_CASE("frechet W median") {
  const std::size_t reps = 200'000;
  std::vector<double> w1(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed + 2, i);
    w1[i] = laws::sample_limit(LimitLaw::frechet_w_vector(1.0, 1), rng)[0];
  }
  std::nth_element(w1.begin(), w1.begin() + reps / 2, w1.end());
  REQUIRE(w1[reps / 2] == Catch::Approx(1.0 / std::log(2.0)).margin(0.02));
}

TEST_CASE("weibull W-vector spacing is Exp(1) when alpha = 1") {
  const std::size_t reps = 100'000;
  std::vector<double> d(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed + 3, i);
    auto w = laws::sample_limit(LimitLaw::weibull_w_vector(1.0, 2), rng);
    d[i] = w[0] - w[1];
  }
  auto rep = tests::ks_one_sample(
      d, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); });
  REQUIRE(rep.p_value > 0.01);
}

TEST_CASE("W-vector monotonicity on every draw") {
  for (std::size_t i = 0; i < 2000; ++i) {
    RngStream r1 = make_stream(kSeed + 4, i);
    auto g = laws::sample_limit(LimitLaw::gumbel_w_vector(5), r1);
    REQUIRE(std::is_sorted(g.rbegin(), g.rend()));
    RngStream r2 = make_stream(kSeed + 5, i);
    auto f = laws::sample_limit(LimitLaw::frechet_w_vector(1.5, 5), r2);
    REQUIRE(std::is_sorted(f.rbegin(), f.rend()));
    RngStream r3 = make_stream(kSeed + 6, i);
    auto w = laws::sample_limit(LimitLaw::weibull_w_vector(2.0, 5), r3);
    for (std::size_t j = 1; j < w.size(); ++j) {
      REQUIRE(w[j] < 0.0);
      REQUIRE(std::fabs(w[j]) > std::fabs(w[j - 1]));
    }
  }
}

TEST_CASE("extreme spacing pair representations") {
  const std::size_t reps = 60'000;
  // Gumbel: Z_i/i + ... + Z_{j-1}/(j-1) =d Z_{j-i:j-1}
  {
    std::vector<double> pair_draws(reps), os_draws(reps);
    auto law = LimitLaw::extreme_spacing_pair(laws::PairDomain::Gumbel, 0.0,
                                              2, 4);
    for (std::size_t i = 0; i < reps; ++i) {
      RngStream rng = make_stream(kSeed + 7, i);
      pair_draws[i] = laws::sample_limit(law, rng)[0];
      // Z_{2:3} via exponential order statistics of a sample of 3
      RngStream rng2 = make_stream(kSeed + 8, i);
      double z[3] = {rng2.exp1(), rng2.exp1(), rng2.exp1()};
      std::sort(z, z + 3);
      os_draws[i] = z[1];
    }
    REQUIRE(tests::ks_two_sample(pair_draws, os_draws).p_value > 0.01);
  }
  // Weibull alpha = 1: pair is Gam(j - i)
  {
    auto law = LimitLaw::extreme_spacing_pair(laws::PairDomain::Weibull, 1.0,
                                              1, 4);
    std::vector<double> d(reps);
    for (std::size_t i = 0; i < reps; ++i) {
      RngStream rng = make_stream(kSeed + 9, i);
      d[i] = laws::sample_limit(law, rng)[0];
    }
    auto rep = tests::ks_one_sample(
        d, [](double x) { return laws::limit_cdf(LimitLaw::gamma(3), x); });
    REQUIRE(rep.p_value > 0.01);
  }
}

TEST_CASE("frechet adjacent spacings are dependent") {
  const std::size_t reps = 1'000'000;
  std::vector<std::pair<double, double>> pairs(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed + 10, i);
    auto w = laws::sample_limit(LimitLaw::frechet_w_vector(1.0, 3), rng);
    pairs[i] = {w[0] - w[1], w[1] - w[2]};
  }
  auto rep = tests::independence_check(pairs);
  REQUIRE(std::fabs(rep.z) > 5.0);
}

TEST_CASE("hall series matches the log-gamma form") {
  const std::size_t reps = 600;
  std::vector<double> hall(reps), direct(reps);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream rng = make_stream(kSeed + 11, i);
    hall[i] = laws::hall_series_sample(2, rng);
    RngStream rng2 = make_stream(kSeed + 12, i);
    direct[i] = laws::sample_limit(LimitLaw::gumbel_w_vector(2), rng2)[1];
    RngStream rng3 = make_stream(kSeed + 13, i);
    double h1 = laws::hall_series_sample(1, rng3);
    mean += h1;
    m2 += h1 * h1;
  }
  REQUIRE(tests::ks_two_sample(hall, direct).p_value > 0.01);
  mean /= reps;
  double var = m2 / reps - mean * mean;
  double se_mean = std::sqrt(M_PI * M_PI / 6.0 / reps);
  REQUIRE(mean == Catch::Approx(special::euler_gamma).margin(3.0 * se_mean));
  // Var[-ln Z] = pi^2/6; SE of the sample variance via the fourth moment
  REQUIRE(var == Catch::Approx(M_PI * M_PI / 6.0).margin(0.5));
}
