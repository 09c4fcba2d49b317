#ifndef SPACINGS_LIMIT_LAWS_HPP
#define SPACINGS_LIMIT_LAWS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "spacings/detail/special_functions.hpp"
#include "spacings/rng.hpp"

// Oracle samplers and cdf evaluators for the limiting distributions: the
// reference side of every convergence test in this project.

namespace spacings::laws {

enum class LimitKind {
  ExpIid,            // m independent Exp(1) draws
  StdNormal,
  HalfNormal,
  Gamma,             // Gam(m)
  PoweredExp,        // Z^theta
  Weibull,           // Wei(delta): P(X <= x) = 1 - exp(-x^delta)
  GumbelWVector,     // W_i = -ln(Z_1 + ... + Z_i), i = 1..j
  FrechetWVector,    // W_i = (Z_1 + ... + Z_i)^(-1/alpha)
  WeibullWVector,    // W_i = -(Z_1 + ... + Z_i)^(1/alpha)
  ExpMax,            // Z_1 + Z_2/2 + ... + Z_j/j  (max of j Exp(1))
  ExtremeSpacingPair,  // (X_{n-i+1:n} - X_{n-j+1:n})/b_n limit
  FrechetG,          // scalar cdf G_{1;alpha}
  WeibullG,          // scalar cdf G_{2;alpha}
  GumbelG            // scalar cdf G_3
};

enum class PairDomain { Frechet, Weibull, Gumbel };

struct LimitLaw {
  LimitKind kind = LimitKind::StdNormal;
  std::size_t m = 1;        // count parameter (m or j)
  double alpha = 1.0;
  double theta = 1.0;
  double delta = 1.0;
  PairDomain pair_domain = PairDomain::Gumbel;
  std::size_t pair_i = 1, pair_j = 2;  // 1 <= i < j

  static LimitLaw exp_iid(std::size_t m) { return {LimitKind::ExpIid, m}; }
  static LimitLaw std_normal() { return {LimitKind::StdNormal}; }
  static LimitLaw half_normal() { return {LimitKind::HalfNormal}; }
  static LimitLaw gamma(std::size_t m) { return {LimitKind::Gamma, m}; }
  static LimitLaw powered_exp(double theta) {
    LimitLaw l{LimitKind::PoweredExp};
    l.theta = theta;
    return l;
  }
  static LimitLaw weibull(double delta) {
    LimitLaw l{LimitKind::Weibull};
    l.delta = delta;
    return l;
  }
  static LimitLaw gumbel_w_vector(std::size_t j) {
    return {LimitKind::GumbelWVector, j};
  }
  static LimitLaw frechet_w_vector(double alpha, std::size_t j) {
    LimitLaw l{LimitKind::FrechetWVector, j};
    l.alpha = alpha;
    return l;
  }
  static LimitLaw weibull_w_vector(double alpha, std::size_t j) {
    LimitLaw l{LimitKind::WeibullWVector, j};
    l.alpha = alpha;
    return l;
  }
  static LimitLaw exp_max(std::size_t j) { return {LimitKind::ExpMax, j}; }
  static LimitLaw extreme_spacing_pair(PairDomain d, double alpha,
                                       std::size_t i, std::size_t j) {
    if (!(i >= 1 && i < j))
      throw std::invalid_argument("extreme_spacing_pair: need 1 <= i < j");
    LimitLaw l{LimitKind::ExtremeSpacingPair};
    l.pair_domain = d;
    l.alpha = alpha;
    l.pair_i = i;
    l.pair_j = j;
    return l;
  }
  static LimitLaw frechet_g(double alpha) {
    LimitLaw l{LimitKind::FrechetG};
    l.alpha = alpha;
    return l;
  }
  static LimitLaw weibull_g(double alpha) {
    LimitLaw l{LimitKind::WeibullG};
    l.alpha = alpha;
    return l;
  }
  static LimitLaw gumbel_g() { return {LimitKind::GumbelG}; }
};

// One draw; vector laws return one component per index.
inline std::vector<double> sample_limit(const LimitLaw& law, RngStream& rng) {
  switch (law.kind) {
    case LimitKind::ExpIid: {
      std::vector<double> z(law.m);
      for (auto& v : z) v = rng.exp1();
      return z;
    }
    case LimitKind::StdNormal:
      return {rng.normal()};
    case LimitKind::HalfNormal:
      return {std::fabs(rng.normal())};
    case LimitKind::Gamma: {
      double s = 0.0;
      for (std::size_t i = 0; i < law.m; ++i) s += rng.exp1();
      return {s};
    }
    case LimitKind::PoweredExp:
      return {std::pow(rng.exp1(), law.theta)};
    case LimitKind::Weibull:
      return {std::pow(rng.exp1(), 1.0 / law.delta)};
    case LimitKind::GumbelWVector: {
      std::vector<double> w(law.m);
      double s = 0.0;
      for (std::size_t i = 0; i < law.m; ++i) {
        s += rng.exp1();
        w[i] = -std::log(s);
      }
      return w;
    }
    case LimitKind::FrechetWVector: {
      std::vector<double> w(law.m);
      double s = 0.0;
      for (std::size_t i = 0; i < law.m; ++i) {
        s += rng.exp1();
        w[i] = std::pow(s, -1.0 / law.alpha);
      }
      return w;
    }
    case LimitKind::WeibullWVector: {
      std::vector<double> w(law.m);
      double s = 0.0;
      for (std::size_t i = 0; i < law.m; ++i) {
        s += rng.exp1();
        w[i] = -std::pow(s, 1.0 / law.alpha);
      }
      return w;
    }
    case LimitKind::ExpMax: {
      double s = 0.0;
      for (std::size_t i = 1; i <= law.m; ++i)
        s += rng.exp1() / static_cast<double>(i);
      return {s};
    }
    case LimitKind::ExtremeSpacingPair: {
      // partial sums S_i, S_j of unit exponentials
      double si = 0.0;
      for (std::size_t l = 1; l <= law.pair_i; ++l) si += rng.exp1();
      if (law.pair_domain == PairDomain::Gumbel) {
        double s = 0.0;
        for (std::size_t l = law.pair_i; l <= law.pair_j - 1; ++l)
          s += rng.exp1() / static_cast<double>(l);
        return {s};
      }
      double sj = si;
      for (std::size_t l = law.pair_i + 1; l <= law.pair_j; ++l)
        sj += rng.exp1();
      if (law.pair_domain == PairDomain::Frechet)
        return {std::pow(si, -1.0 / law.alpha) - std::pow(sj, -1.0 / law.alpha)};
      return {std::pow(sj, 1.0 / law.alpha) - std::pow(si, 1.0 / law.alpha)};
    }
    case LimitKind::FrechetG: {
      // inversion of exp(-x^{-alpha})
      double u = rng.u01();
      return {std::pow(-std::log(u), -1.0 / law.alpha)};
    }
    case LimitKind::WeibullG: {
      double u = rng.u01();
      return {-std::pow(-std::log(u), 1.0 / law.alpha)};
    }
    case LimitKind::GumbelG: {
      double u = rng.u01();
      return {-std::log(-std::log(u))};
    }
  }
  return {};
}

inline bool is_scalar_law(const LimitLaw& law) {
  switch (law.kind) {
    case LimitKind::GumbelWVector:
    case LimitKind::FrechetWVector:
    case LimitKind::WeibullWVector:
      return law.m == 1;
    case LimitKind::ExpIid:
      return law.m == 1;
    default:
      return true;
  }
}

// Closed-form cdf; scalar laws only.
inline double limit_cdf(const LimitLaw& law, double x) {
  switch (law.kind) {
    case LimitKind::StdNormal:
      return special::normal_cdf(x);
    case LimitKind::HalfNormal:
      return x <= 0.0 ? 0.0 : 2.0 * special::normal_cdf(x) - 1.0;
    case LimitKind::Gamma:
      return x <= 0.0 ? 0.0
                      : special::gamma_p(static_cast<double>(law.m), x);
    case LimitKind::PoweredExp:
      return x <= 0.0 ? 0.0
                      : -std::expm1(-std::pow(x, 1.0 / law.theta));
    case LimitKind::Weibull:
      return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, law.delta));
    case LimitKind::ExpMax:
      return x <= 0.0
                 ? 0.0
                 : std::pow(-std::expm1(-x), static_cast<double>(law.m));
    case LimitKind::ExpIid:
      if (law.m != 1)
        throw std::invalid_argument("limit_cdf: vector law");
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case LimitKind::FrechetG:
      return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -law.alpha));
    case LimitKind::WeibullG:
      return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, law.alpha));
    case LimitKind::GumbelG:
      return std::exp(-std::exp(-x));
    case LimitKind::GumbelWVector:
      if (law.m == 1) return std::exp(-std::exp(-x));  // W_1 ~ G_3
      throw std::invalid_argument("limit_cdf: vector law");
    case LimitKind::FrechetWVector:
      if (law.m == 1)
        return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -law.alpha));
      throw std::invalid_argument("limit_cdf: vector law");
    case LimitKind::WeibullWVector:
      if (law.m == 1)
        return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, law.alpha));
      throw std::invalid_argument("limit_cdf: vector law");
    case LimitKind::ExtremeSpacingPair:
      if (law.pair_domain == PairDomain::Gumbel)
        // Z_i/i + ... + Z_{j-1}/(j-1) =d Z_{j-i:j-1}
        throw std::invalid_argument(
            "limit_cdf: use exp-max style oracle sampling for pairs");
      throw std::invalid_argument("limit_cdf: no closed form for this pair");
  }
  throw std::invalid_argument("limit_cdf: unsupported law");
}

// Hall's series form of the k-th Gumbel W component:
//   sum_{i=k}^{I} (Z_i - 1)/i + gamma - sum_{i=1}^{k-1} 1/i,
// truncated at I large enough that the discarded tail variance
// sum_{i>I} i^{-2} < 1e-6.
inline double hall_series_sample(std::size_t k, RngStream& rng) {
  if (k < 1) throw std::domain_error("hall_series_sample: k >= 1");
  constexpr std::size_t truncation = 1'000'000;  // tail variance ~ 1/I
  double sum = 0.0;
  for (std::size_t i = k; i <= truncation; ++i)
    sum += (rng.exp1() - 1.0) / static_cast<double>(i);
  double harmonic = 0.0;
  for (std::size_t i = 1; i < k; ++i) harmonic += 1.0 / static_cast<double>(i);
  return sum + special::euler_gamma - harmonic;
}

}  // namespace spacings::laws

#endif  // SPACINGS_LIMIT_LAWS_HPP
