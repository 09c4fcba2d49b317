#include "spacings/distributions.hpp"

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using namespace spacings;

namespace {
std::vector<Distribution> builtins() {
  return {Distribution::uniform(),        Distribution::exponential(1.0),
          Distribution::standard_normal(), Distribution::pareto(2.0),
          Distribution::bounded_weibull_tail(2.0, 1.0),
          Distribution::chanda(2.0)};
}
}  // namespace

TEST_CASE("quantile examples") {
  REQUIRE(Distribution::uniform().quantile(0.3) == 0.3);
  REQUIRE(Distribution::exponential(1.0).quantile(0.5) ==
          Catch::Approx(std::log(2.0)).epsilon(1e-14));
  REQUIRE(Distribution::chanda(2.0).quantile(0.75) ==
          Catch::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-14));
  REQUIRE_THROWS_AS(Distribution::uniform().quantile(1.5), std::domain_error);
  REQUIRE_THROWS_AS(Distribution::uniform().quantile(-0.1), std::domain_error);
}

TEST_CASE("density and cdf examples") {
  auto [fu, Fu] = Distribution::uniform().density_cdf(0.4);
  REQUIRE(fu == 1.0);
  REQUIRE(Fu == 0.4);
  auto [fc, Fc] = Distribution::chanda(2.0).density_cdf(0.5);
  REQUIRE(fc == Catch::Approx(0.375).epsilon(1e-14));
  REQUIRE(Fc == Catch::Approx(0.5625).epsilon(1e-14));
  auto [fp, Fp] = Distribution::pareto(2.0).density_cdf(2.0);
  REQUIRE(fp == Catch::Approx(0.25).epsilon(1e-14));
  REQUIRE(Fp == Catch::Approx(0.75).epsilon(1e-14));
  // outside support
  REQUIRE(Distribution::pareto(2.0).density_cdf(0.5) ==
          std::pair<double, double>(0.0, 0.0));
}

TEST_CASE("quantile/cdf round trip on a grid") {
  for (const auto& d : builtins()) {
    for (int i = 1; i < 1000; ++i) {
      double u = i / 1000.0;
      double x = d.quantile(u);
      if (d.pdf(x) > 0.0)
        REQUIRE(d.cdf(x) == Catch::Approx(u).margin(1e-10));
    }
  }
}

TEST_CASE("pdf integrates to one") {
  for (const auto& d : builtins()) {
    Support sup = d.support();
    double lo = sup.lower.finite() ? sup.lower.value : d.quantile(1e-11);
    double hi = sup.upper.finite() ? sup.upper.value : d.quantile(1.0 - 1e-11);
    double mass =
        quad::integrate([&](double x) { return d.pdf(x); }, lo, hi, 1e-9, 0.0);
    REQUIRE(mass == Catch::Approx(1.0).margin(1e-6));
  }
}

TEST_CASE("mean residual life") {
  auto exp1 = Distribution::exponential(1.0);
  REQUIRE(exp1.mean_residual(0.0) == Catch::Approx(1.0));
  REQUIRE(exp1.mean_residual(7.3) == Catch::Approx(1.0));
  REQUIRE(Distribution::uniform().mean_residual(0.6) ==
          Catch::Approx(0.2).epsilon(1e-14));
  REQUIRE(Distribution::pareto(2.0).mean_residual(3.0) ==
          Catch::Approx(3.0).epsilon(1e-12));
  REQUIRE_THROWS_AS(Distribution::pareto(1.0).mean_residual(2.0),
                    std::domain_error);
  // quadrature fallback (chanda has no closed form here): against a direct
  // numerical integral of t f(t)
  auto ch = Distribution::chanda(2.0);
  double x = 0.2;
  double tail = 1.0 - ch.cdf(x);
  double num = quad::integrate([&](double t) { return t * ch.pdf(t); }, x, 1.0,
                               1e-12, 0.0);
  REQUIRE(ch.mean_residual(x) ==
          Catch::Approx(num / tail - x).epsilon(1e-7));
  // standard normal closed form vs quadrature
  auto sn = Distribution::standard_normal();
  double grid = 1.3;
  double direct = quad::integrate_to_inf(
                      [&](double t) { return 1.0 - sn.cdf(t); }, grid, 1e-12,
                      0.0) /
                  (1.0 - sn.cdf(grid));
  REQUIRE(sn.mean_residual(grid) == Catch::Approx(direct).epsilon(1e-8));
}

TEST_CASE("von Mises diagnostics converge to the domain limit") {
  struct Case {
    Distribution d;
    double limit;
    double margin;  // the normal ratio converges only at O(1/x^2)
  };
  std::vector<Case> cases = {
      {Distribution::pareto(2.0), 2.0, 1e-3},
      {Distribution::uniform(), 1.0, 1e-3},
      {Distribution::bounded_weibull_tail(2.0, 1.0), 2.0, 1e-3},
      {Distribution::exponential(1.0), 1.0, 1e-3},
      {Distribution::standard_normal(), 1.0, 0.05},
      {Distribution::chanda(2.0), 1.0, 1e-3},
  };
  for (const auto& c : cases) {
    DomainInfo info = c.d.domain_info();
    // geometric grid of quantile levels approaching the endpoint
    double first = 0.0, last = 0.0;
    for (double eps = 1e-1; eps >= 1e-7; eps /= 10.0) {
      last = c.d.von_mises_diagnostic(info, c.d.quantile(1.0 - eps));
      if (eps == 1e-1) first = last;
    }
    REQUIRE(last == Catch::Approx(c.limit).margin(c.margin));
    REQUIRE(std::fabs(last - c.limit) <= std::fabs(first - c.limit) + 1e-12);
  }
  // exact-at-finite-x examples
  REQUIRE(Distribution::pareto(2.0).von_mises_diagnostic(
              {TailDomain::Frechet, 2.0}, 10.0) == Catch::Approx(2.0));
  REQUIRE(Distribution::uniform().von_mises_diagnostic(
              {TailDomain::Weibull, 1.0}, 0.9) == Catch::Approx(1.0));
  REQUIRE(Distribution::exponential(1.0).von_mises_diagnostic(
              {TailDomain::Gumbel, 0.0}, 5.0) == Catch::Approx(1.0));
  REQUIRE_THROWS_AS(Distribution::uniform().von_mises_diagnostic(
                        {TailDomain::None, 0.0}, 0.5),
                    std::invalid_argument);
}

TEST_CASE("norming constants per regime") {
  auto exp1 = Distribution::exponential(1.0);
  NormingConstants nc =
      norming_constants(exp1, 100, 90, Regime::Intermediate);
  REQUIRE(nc.a_n == Catch::Approx(std::log(10.0)).epsilon(1e-12));
  REQUIRE(nc.c_n == Catch::Approx(0.1).epsilon(1e-12));
  REQUIRE(nc.b_n == Catch::Approx(0.1 * std::sqrt(10.0)).epsilon(1e-12));

  auto uni = Distribution::uniform();
  CentralRegime cr = uni.central_regime(0.5);
  NormingConstants cc = norming_constants(uni, 100, 50, Regime::Central, &cr);
  REQUIRE(cc.c_n == Catch::Approx(0.01).epsilon(1e-12));
  REQUIRE(cc.t_n.has_value());
  REQUIRE(*cc.t_n == Catch::Approx(0.05).epsilon(1e-12));

  auto par = Distribution::pareto(1.0);
  NormingConstants ec = norming_constants(par, 1000, 1000, Regime::Extreme);
  REQUIRE(ec.a_n == 0.0);
  REQUIRE(ec.b_n == Catch::Approx(1000.0).epsilon(1e-9));

  // intermediate invariant b_n = c_n sqrt(n-k), exactly
  for (std::size_t n : {100u, 1000u, 10000u}) {
    for (std::size_t k : {n / 2, n - n / 10, n - 30}) {
      NormingConstants x =
          norming_constants(exp1, n, k, Regime::Intermediate);
      REQUIRE(x.b_n == x.c_n * std::sqrt(static_cast<double>(n - k)));
    }
  }
}

TEST_CASE("chanda central regime constant M") {
  auto ch = Distribution::chanda(2.0);
  CentralRegime cr = ch.central_regime(0.5);
  double theta = 1.0 / 3.0;
  REQUIRE(cr.theta == Catch::Approx(theta));
  REQUIRE(cr.M == Catch::Approx(std::pow(2.0, theta)).epsilon(1e-12));
  // finite-difference limit of |F^{-1}(1/2+h) - F^{-1}(1/2)| / h^theta
  double prev_err = 1e9;
  for (double h : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    double ratio =
        std::fabs(ch.quantile(0.5 + h) - ch.quantile(0.5)) /
        std::pow(h, theta);
    double err = std::fabs(ratio - std::pow(2.0, theta));
    // descent holds until roundoff in the quantile difference dominates
    REQUIRE(err <= prev_err + 1e-9);
    prev_err = err;
  }
  REQUIRE(prev_err < 1e-6);
  REQUIRE_FALSE(ch.satisfies_demb());
  REQUIRE(Distribution::uniform().satisfies_demb());
}

TEST_CASE("quantile-table family") {
  // table sampled from the exponential quantile function
  std::vector<std::pair<double, double>> rows;
  for (int i = 0; i <= 2000; ++i) {
    double u = i / 2000.0;
    rows.emplace_back(u, u < 1.0 ? -std::log1p(-u) : 16.0);
  }
  auto d = Distribution::from_quantile_table(rows);
  REQUIRE(d.quantile(0.5) == Catch::Approx(std::log(2.0)).margin(1e-5));
  REQUIRE(d.cdf(std::log(2.0)) == Catch::Approx(0.5).margin(1e-5));
  REQUIRE(d.pdf(0.7) == Catch::Approx(std::exp(-0.7)).margin(1e-3));
  REQUIRE_THROWS_AS(
      Distribution::from_quantile_table({{0.0, 0.0}, {0.5, -1.0}, {1.0, 1.0}}),
      std::invalid_argument);
}

TEST_CASE("norming constants reject a vanishing density") {
  auto ch = Distribution::chanda(2.0);
  CentralRegime bad;  // f(x_p) = 0 at the chanda median
  bad.p = 0.5;
  bad.x_p = 0.0;
  bad.f_xp = 0.0;
  REQUIRE_THROWS_AS(norming_constants(ch, 100, 50, Regime::Central, &bad),
                    std::domain_error);
  REQUIRE_THROWS_AS(norming_constants(ch, 100, 50, Regime::Central, nullptr),
                    std::domain_error);
}
