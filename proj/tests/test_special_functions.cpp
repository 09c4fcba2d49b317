#include "spacings/detail/special_functions.hpp"
#include "spacings/detail/quadrature.hpp"

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

using namespace spacings;

TEST_CASE("normal cdf/quantile round trip") {
  for (double p : {1e-8, 1e-4, 0.01, 0.3, 0.5, 0.7, 0.99, 1.0 - 1e-6}) {
    double x = special::normal_quantile(p);
    REQUIRE(special::normal_cdf(x) == Catch::Approx(p).epsilon(1e-12));
  }
  REQUIRE(special::normal_quantile(0.5) == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(special::normal_quantile(0.975) ==
          Catch::Approx(1.959963984540054).epsilon(1e-12));
}

TEST_CASE("incomplete gamma against known values") {
  // P(1, x) = 1 - e^{-x}
  REQUIRE(special::gamma_p(1.0, 2.0) ==
          Catch::Approx(1.0 - std::exp(-2.0)).epsilon(1e-13));
  // P(3, x): Poisson tail identity P(Gam(3) <= x) = P(Poi(x) >= 3)
  double x = 2.5;
  double poi = 1.0 - std::exp(-x) * (1.0 + x + x * x / 2.0);
  REQUIRE(special::gamma_p(3.0, x) == Catch::Approx(poi).epsilon(1e-12));
  // quantile inverts
  for (double a : {0.7, 1.0, 3.0, 20.0}) {
    for (double p : {0.01, 0.3, 0.5, 0.9, 0.999}) {
      double q = special::gamma_quantile(a, p);
      REQUIRE(special::gamma_p(a, q) == Catch::Approx(p).epsilon(1e-9));
    }
  }
}

TEST_CASE("incomplete beta and its inverse") {
  // I_x(1, b) = 1 - (1-x)^b
  REQUIRE(special::beta_inc(1.0, 4.0, 0.3) ==
          Catch::Approx(1.0 - std::pow(0.7, 4.0)).epsilon(1e-13));
  // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
  REQUIRE(special::beta_inc(2.5, 3.5, 0.4) ==
          Catch::Approx(1.0 - special::beta_inc(3.5, 2.5, 0.6)).epsilon(1e-12));
  for (double a : {1.0, 5.0, 5000.0}) {
    for (double b : {2.0, 50.0, 5001.0}) {
      for (double p : {0.001, 0.25, 0.5, 0.75, 0.999}) {
        double x = special::beta_quantile(a, b, p);
        REQUIRE(special::beta_inc(a, b, x) == Catch::Approx(p).margin(1e-11));
      }
    }
  }
}

TEST_CASE("kolmogorov survival function") {
  // Q(t) -> 1 as t -> 0, -> 0 as t grows; standard value Q(1) ~ 0.26999
  REQUIRE(special::kolmogorov_survival(0.0) == 1.0);
  REQUIRE(special::kolmogorov_survival(1.0) ==
          Catch::Approx(0.2699996716773).epsilon(1e-8));
  REQUIRE(special::kolmogorov_survival(3.0) < 1e-7);
}

TEST_CASE("gauss-kronrod quadrature") {
  auto f = [](double x) { return std::exp(-x * x); };
  double v = quad::integrate(f, -8.0, 8.0, 1e-12, 0.0);
  REQUIRE(v == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  // semi-infinite: integral of e^{-x} over [2, inf) = e^{-2}
  double w = quad::integrate_to_inf([](double x) { return std::exp(-x); }, 2.0,
                                    1e-12, 0.0);
  REQUIRE(w == Catch::Approx(std::exp(-2.0)).epsilon(1e-10));
}
