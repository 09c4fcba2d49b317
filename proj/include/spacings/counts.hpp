#ifndef SPACINGS_COUNTS_HPP
#define SPACINGS_COUNTS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spacings/detail/quadrature.hpp"
#include "spacings/detail/special_functions.hpp"
#include "spacings/distributions.hpp"

// Neighbor-count statistics K- / K+ around X_{k:n}, their limiting count
// laws in all three regimes, and the exact spacing-count duality.

namespace spacings::counts {

struct CountRecord {
  std::size_t k_minus = 0, k_plus = 0;
  double d = 0.0;
  std::size_t k = 0, n = 0;
};

// Counts observations strictly inside the open intervals
// (X_{k:n} - d, X_{k:n}) and (X_{k:n}, X_{k:n} + d); the comparisons are
// written on the spacing X_{k:n} - X_j itself so the duality with the
// spacing events is exact at the floating-point level.
inline CountRecord count_neighbors(std::span<const double> sorted_sample,
                                   std::size_t k, double d) {
  const std::size_t n = sorted_sample.size();
  if (k < 1 || k > n) throw std::domain_error("count_neighbors: bad k");
  if (!(d > 0.0)) throw std::domain_error("count_neighbors: d must be > 0");
  const double c = sorted_sample[k - 1];
  CountRecord rec;
  rec.d = d;
  rec.k = k;
  rec.n = n;
  for (std::size_t j = k - 1; j-- > 0;) {
    if (!(c - sorted_sample[j] < d)) break;
    if (sorted_sample[j] < c) ++rec.k_minus;
  }
  for (std::size_t j = k; j < n; ++j) {
    if (!(sorted_sample[j] - c < d)) break;
    if (sorted_sample[j] > c) ++rec.k_plus;
  }
  return rec;
}

enum class CountKind {
  Poisson,          // Poi(lambda)
  Binomial,         // Bin(k, 1 - e^{-lambda}): Gumbel-domain K+
  NegBinomial,      // Gumbel-domain K-
  CensoredPoisson,  // Poi(lambda) censored on the right at k
  FrechetMixed      // Frechet-domain K+ via the Gamma-mixture integral
};

struct CountLimitLaw {
  CountKind kind = CountKind::Poisson;
  double lambda = 1.0;
  std::size_t k = 1;     // top-rank parameter for the extreme laws
  double alpha = 1.0;    // Frechet tail index

  static CountLimitLaw poisson(double lambda) {
    return {CountKind::Poisson, lambda};
  }
  static CountLimitLaw binomial(std::size_t k, double lambda) {
    return {CountKind::Binomial, lambda, k};
  }
  static CountLimitLaw neg_binomial(std::size_t k, double lambda) {
    return {CountKind::NegBinomial, lambda, k};
  }
  static CountLimitLaw censored_poisson(double lambda, std::size_t k) {
    return {CountKind::CensoredPoisson, lambda, k};
  }
  static CountLimitLaw frechet_mixed(double alpha, std::size_t k,
                                     double lambda = 1.0) {
    return {CountKind::FrechetMixed, lambda, k, alpha};
  }
};

namespace detail {

inline double poisson_pmf(double lambda, long j) {
  if (j < 0) return 0.0;
  return std::exp(-lambda + j * std::log(lambda) -
                  std::lgamma(static_cast<double>(j) + 1.0));
}

inline double log_choose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// P(K- < j) for the Gumbel-domain left count:
//   sum_{i<j} C(k+j, i) (1-e^{-lambda})^i e^{-lambda(k+j-i)}
inline double neg_binomial_cdf_below(std::size_t k, double lambda, long j) {
  if (j <= 0) return 0.0;
  double p = -std::expm1(-lambda);
  double lp = std::log(p), lq = -lambda;
  double kd = static_cast<double>(k), jd = static_cast<double>(j);
  double sum = 0.0;
  for (long i = 0; i < j; ++i)
    sum += std::exp(log_choose(kd + jd, static_cast<double>(i)) +
                    i * lp + (kd + jd - i) * lq);
  return sum;
}

// P(K+ < j) in the Frechet domain: with G ~ Gam(k - j + 1),
//   P(G^{-1/a} - (G + H)^{-1/a} > lambda), H ~ Gam(j) independent,
// reduced to a univariate integral through the Gamma-Poisson link.
inline double frechet_cdf_below(double alpha, std::size_t k, double lambda,
                                long j) {
  if (j <= 0) return 0.0;
  if (j > static_cast<long>(k)) return 1.0;
  const double a = static_cast<double>(k - j + 1);
  const double gmax = std::pow(lambda, -alpha);
  const double lga = std::lgamma(a);
  auto integrand = [&](double g) {
    double dens = std::exp((a - 1.0) * std::log(g) - g - lga);
    double t = std::pow(std::pow(g, -1.0 / alpha) - lambda, -alpha) - g;
    if (t <= 0.0) return dens;
    // P(Gam(j) > t) = P(Poi(t) < j)
    double tail = 0.0;
    for (long i = 0; i < j; ++i) tail += poisson_pmf(t, i);
    return dens * tail;
  };
  return quad::integrate(integrand, 0.0, gmax, 1e-10, 1e-8);
}

}  // namespace detail

// P(K < j): distribution function of the limiting count, evaluated below j.
inline double count_limit_cdf_below(const CountLimitLaw& law, long j) {
  if (j <= 0) return 0.0;
  switch (law.kind) {
    case CountKind::Poisson: {
      double sum = 0.0;
      for (long i = 0; i < j; ++i) sum += detail::poisson_pmf(law.lambda, i);
      return sum;
    }
    case CountKind::Binomial: {
      if (j > static_cast<long>(law.k)) return 1.0;
      double p = -std::expm1(-law.lambda);
      double kd = static_cast<double>(law.k);
      double sum = 0.0;
      for (long i = 0; i < j; ++i)
        sum += std::exp(detail::log_choose(kd, static_cast<double>(i)) +
                        i * std::log(p) + (kd - i) * (-law.lambda));
      return sum;
    }
    case CountKind::NegBinomial:
      return detail::neg_binomial_cdf_below(law.k, law.lambda, j);
    case CountKind::CensoredPoisson: {
      if (j > static_cast<long>(law.k)) return 1.0;
      double sum = 0.0;
      for (long i = 0; i < j; ++i) sum += detail::poisson_pmf(law.lambda, i);
      return sum;
    }
    case CountKind::FrechetMixed:
      return detail::frechet_cdf_below(law.alpha, law.k, law.lambda, j);
  }
  return 0.0;
}

inline double count_limit_pmf(const CountLimitLaw& law, long j) {
  if (j < 0) return 0.0;
  switch (law.kind) {
    case CountKind::Poisson:
      return detail::poisson_pmf(law.lambda, j);
    case CountKind::CensoredPoisson:
      if (j > static_cast<long>(law.k)) return 0.0;
      if (j == static_cast<long>(law.k))
        return 1.0 - count_limit_cdf_below(law, j);  // censored upper tail
      return detail::poisson_pmf(law.lambda, j);
    case CountKind::Binomial:
    case CountKind::FrechetMixed:
      if (j > static_cast<long>(law.k)) return 0.0;
      return count_limit_cdf_below(law, j + 1) - count_limit_cdf_below(law, j);
    case CountKind::NegBinomial:
      return count_limit_cdf_below(law, j + 1) - count_limit_cdf_below(law, j);
  }
  return 0.0;
}

// Exact per-realization duality between count events and spacing events:
//   [K- < i]  iff  [X_{k:n} - X_{k-i:n} >= d], and symmetrically for K+.
// Returns false only if some realization violates the identity.
inline bool duality_check(std::span<const double> sorted_sample, std::size_t k,
                          std::size_t i, std::size_t j, double d) {
  CountRecord rec = count_neighbors(sorted_sample, k, d);
  bool ok = true;
  if (i >= 1 && k > i) {
    bool count_event = rec.k_minus < i;
    bool spacing_event =
        !(sorted_sample[k - 1] - sorted_sample[k - 1 - i] < d);
    ok = ok && (count_event == spacing_event);
  }
  if (j >= 1 && k + j <= sorted_sample.size()) {
    bool count_event = rec.k_plus < j;
    bool spacing_event =
        !(sorted_sample[k - 1 + j] - sorted_sample[k - 1] < d);
    ok = ok && (count_event == spacing_event);
  }
  return ok;
}

// Limiting success probability beta(d) = lim F-bar(x+d)/F-bar(x); defined
// only for unbounded exponential-type right tails.
inline std::optional<double> beta_of_d(const Distribution& dist, double d) {
  if (dist.family() == Family::Exponential)
    return std::exp(-dist.lambda() * d);
  return std::nullopt;
}

}  // namespace spacings::counts

#endif  // SPACINGS_COUNTS_HPP
