#ifndef SPACINGS_DISTRIBUTIONS_HPP
#define SPACINGS_DISTRIBUTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spacings/detail/quadrature.hpp"
#include "spacings/detail/special_functions.hpp"

// Parametric families with quantile/pdf/cdf evaluation, mean residual life,
// extreme-value domain metadata, von Mises ratio diagnostics, and the
// regime-specific norming constants used by the window samplers.

namespace spacings {

// Support endpoint carrying an explicit finiteness tag; infinite endpoints
// never enter arithmetic as sentinel floats.
struct Endpoint {
  enum class Kind { Finite, NegInf, PosInf };
  Kind kind = Kind::Finite;
  double value = 0.0;

  static Endpoint at(double v) { return {Kind::Finite, v}; }
  static Endpoint neg_inf() { return {Kind::NegInf, 0.0}; }
  static Endpoint pos_inf() { return {Kind::PosInf, 0.0}; }
  bool finite() const { return kind == Kind::Finite; }
};

struct Support {
  Endpoint lower, upper;
};

enum class TailDomain { Frechet, Weibull, Gumbel, None };

struct DomainInfo {
  TailDomain domain = TailDomain::None;
  double alpha = 0.0;  // meaningful for Frechet/Weibull only
};

// Central-regime parameters: quantile location, density there, and the
// local quantile-growth exponent theta with its scale constant M.
struct CentralRegime {
  double p = 0.5;
  double x_p = 0.0;
  double f_xp = 0.0;
  double theta = 1.0;
  double M = 1.0;
};

enum class Regime { Central, Intermediate, Extreme };

struct NormingConstants {
  Regime regime = Regime::Central;
  std::size_t n = 0;
  std::size_t k = 0;
  double a_n = 0.0;   // centering for X_{k:n}
  double b_n = 1.0;   // scale for X_{k:n}
  double c_n = 1.0;   // common scale for the adjacent spacings
  std::optional<double> t_n;  // central-regime sqrt(p(1-p)/n)
};

enum class Family {
  Uniform,
  Exponential,
  StdNormal,
  Pareto,
  BoundedWeibullTail,
  Chanda,
  QuantileTable
};

class Distribution {
 public:
  static Distribution uniform() { return Distribution(Family::Uniform); }

  static Distribution exponential(double lambda = 1.0) {
    if (!(lambda > 0.0))
      throw std::invalid_argument("exponential: lambda must be positive");
    Distribution d(Family::Exponential);
    d.lambda_ = lambda;
    return d;
  }

  static Distribution standard_normal() {
    return Distribution(Family::StdNormal);
  }

  static Distribution pareto(double alpha) {
    if (!(alpha > 0.0))
      throw std::invalid_argument("pareto: alpha must be positive");
    Distribution d(Family::Pareto);
    d.alpha_ = alpha;
    return d;
  }

  // F(x) = 1 - (x1 - x)^alpha on [x1 - 1, x1]; a Weibull-domain family with
  // an adjustable right endpoint and tail index.
  static Distribution bounded_weibull_tail(double alpha, double x1) {
    if (!(alpha > 0.0))
      throw std::invalid_argument(
          "bounded_weibull_tail: alpha must be positive");
    Distribution d(Family::BoundedWeibullTail);
    d.alpha_ = alpha;
    d.x1_ = x1;
    return d;
  }

  // pdf (eta+1)|x|^eta / 2 on [-1, 1]; the density vanishes (eta > 0) or
  // blows up (eta in (-1,0)) at the median, so the central limit theory
  // runs through the theta = 1/(eta+1) branch there.
  static Distribution chanda(double eta) {
    if (!(eta > -1.0))
      throw std::invalid_argument("chanda: eta must exceed -1");
    Distribution d(Family::Chanda);
    d.eta_ = eta;
    return d;
  }

  // User-supplied quantile function as a monotone (u, F^{-1}(u)) table.
  static Distribution from_quantile_table(
      std::vector<std::pair<double, double>> table) {
    if (table.size() < 2)
      throw std::invalid_argument("quantile table needs at least two rows");
    std::sort(table.begin(), table.end());
    for (std::size_t i = 1; i < table.size(); ++i) {
      if (table[i].first <= table[i - 1].first ||
          table[i].second < table[i - 1].second)
        throw std::invalid_argument("quantile table must be monotone");
    }
    if (table.front().first > 0.0 || table.back().first < 1.0)
      throw std::invalid_argument("quantile table must cover u in [0,1]");
    Distribution d(Family::QuantileTable);
    d.table_ = std::move(table);
    return d;
  }

  Family family() const { return family_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  double eta() const { return eta_; }

  std::string name() const {
    switch (family_) {
      case Family::Uniform: return "uniform";
      case Family::Exponential: return "exponential";
      case Family::StdNormal: return "standard-normal";
      case Family::Pareto: return "pareto";
      case Family::BoundedWeibullTail: return "bounded-weibull-tail";
      case Family::Chanda: return "chanda";
      case Family::QuantileTable: return "quantile-table";
    }
    return "?";
  }

  Support support() const {
    switch (family_) {
      case Family::Uniform:
        return {Endpoint::at(0.0), Endpoint::at(1.0)};
      case Family::Exponential:
        return {Endpoint::at(0.0), Endpoint::pos_inf()};
      case Family::StdNormal:
        return {Endpoint::neg_inf(), Endpoint::pos_inf()};
      case Family::Pareto:
        return {Endpoint::at(1.0), Endpoint::pos_inf()};
      case Family::BoundedWeibullTail:
        return {Endpoint::at(x1_ - 1.0), Endpoint::at(x1_)};
      case Family::Chanda:
        return {Endpoint::at(-1.0), Endpoint::at(1.0)};
      case Family::QuantileTable:
        return {Endpoint::at(table_.front().second),
                Endpoint::at(table_.back().second)};
    }
    return {};
  }

  // Domain of maximal attraction of the right tail.
  DomainInfo domain_info() const {
    switch (family_) {
      case Family::Uniform:
        return {TailDomain::Weibull, 1.0};
      case Family::Exponential:
        return {TailDomain::Gumbel, 0.0};
      case Family::StdNormal:
        return {TailDomain::Gumbel, 0.0};
      case Family::Pareto:
        return {TailDomain::Frechet, alpha_};
      case Family::BoundedWeibullTail:
        return {TailDomain::Weibull, alpha_};
      case Family::Chanda:
        // 1 - F(x) ~ (eta+1)(1-x)/2 near x = 1
        return {TailDomain::Weibull, 1.0};
      case Family::QuantileTable:
        return {TailDomain::None, 0.0};
    }
    return {};
  }

  // Condition-level annotation: whether the quantile function satisfies the
  // local uniformity condition needed for the theta = 1 spacing limit.
  // Checked analytically per family, not numerically.
  bool satisfies_demb() const {
    if (family_ == Family::Chanda) return !(eta_ > 0.0);
    return family_ != Family::QuantileTable;
  }

  double quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0))
      throw std::domain_error("quantile: u outside [0,1]");
    switch (family_) {
      case Family::Uniform:
        return u;
      case Family::Exponential:
        return u < 1.0 ? -std::log1p(-u) / lambda_
                       : std::numeric_limits<double>::infinity();
      case Family::StdNormal:
        return special::normal_quantile(u);
      case Family::Pareto:
        return u < 1.0 ? std::pow(1.0 - u, -1.0 / alpha_)
                       : std::numeric_limits<double>::infinity();
      case Family::BoundedWeibullTail:
        return x1_ - std::pow(1.0 - u, 1.0 / alpha_);
      case Family::Chanda:
        return u >= 0.5 ? std::pow(2.0 * u - 1.0, 1.0 / (eta_ + 1.0))
                        : -std::pow(1.0 - 2.0 * u, 1.0 / (eta_ + 1.0));
      case Family::QuantileTable:
        return table_quantile(u);
    }
    return 0.0;
  }

  double cdf(double x) const {
    switch (family_) {
      case Family::Uniform:
        return std::clamp(x, 0.0, 1.0);
      case Family::Exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-lambda_ * x);
      case Family::StdNormal:
        return special::normal_cdf(x);
      case Family::Pareto:
        return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -alpha_);
      case Family::BoundedWeibullTail:
        if (x <= x1_ - 1.0) return 0.0;
        if (x >= x1_) return 1.0;
        return 1.0 - std::pow(x1_ - x, alpha_);
      case Family::Chanda: {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) return 1.0;
        double t = std::pow(std::fabs(x), eta_ + 1.0);
        return x >= 0.0 ? 0.5 + 0.5 * t : 0.5 - 0.5 * t;
      }
      case Family::QuantileTable:
        return table_cdf(x);
    }
    return 0.0;
  }

  double pdf(double x) const {
    switch (family_) {
      case Family::Uniform:
        return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
      case Family::Exponential:
        return x < 0.0 ? 0.0 : lambda_ * std::exp(-lambda_ * x);
      case Family::StdNormal:
        return special::normal_pdf(x);
      case Family::Pareto:
        return x < 1.0 ? 0.0 : alpha_ * std::pow(x, -alpha_ - 1.0);
      case Family::BoundedWeibullTail:
        if (x < x1_ - 1.0 || x > x1_) return 0.0;
        return alpha_ * std::pow(x1_ - x, alpha_ - 1.0);
      case Family::Chanda:
        if (x < -1.0 || x > 1.0) return 0.0;
        return 0.5 * (eta_ + 1.0) * std::pow(std::fabs(x), eta_);
      case Family::QuantileTable: {
        double h = std::max(1e-6, 1e-6 * std::fabs(x));
        return std::max(0.0, (table_cdf(x + h) - table_cdf(x - h)) / (2.0 * h));
      }
    }
    return 0.0;
  }

  std::pair<double, double> density_cdf(double x) const {
    return {pdf(x), cdf(x)};
  }

  // Mean residual life m(x) = E(X - x | X > x); closed form where available,
  // otherwise adaptive quadrature of the integrated survival function.
  double mean_residual(double x) const {
    double F = cdf(x);
    if (F >= 1.0)
      throw std::domain_error("mean_residual: x at or beyond upper endpoint");
    switch (family_) {
      case Family::Uniform:
        return (1.0 - std::max(x, 0.0)) / 2.0;
      case Family::Exponential:
        return 1.0 / lambda_;
      case Family::StdNormal:
        return special::normal_pdf(x) / (1.0 - special::normal_cdf(x)) - x;
      case Family::Pareto:
        if (alpha_ <= 1.0)
          throw std::domain_error("mean_residual: divergent tail mean");
        return std::max(x, 1.0) / (alpha_ - 1.0);
      case Family::BoundedWeibullTail:
        return (x1_ - std::max(x, x1_ - 1.0)) / (alpha_ + 1.0);
      default:
        return mean_residual_quadrature(x, F);
    }
  }

  // The von Mises ratio whose limit identifies membership in the given
  // domain: x f/(1-F), (x1-x) f/(1-F), or f m/(1-F).
  double von_mises_diagnostic(const DomainInfo& info, double x) const {
    double F = cdf(x);
    if (F >= 1.0)
      throw std::domain_error("von_mises_diagnostic: cdf(x) must be < 1");
    double f = pdf(x), surv = 1.0 - F;
    switch (info.domain) {
      case TailDomain::Frechet:
        return x * f / surv;
      case TailDomain::Weibull: {
        Endpoint up = support().upper;
        if (!up.finite())
          throw std::domain_error(
              "von_mises_diagnostic: Weibull domain needs finite endpoint");
        return (up.value - x) * f / surv;
      }
      case TailDomain::Gumbel:
        return f * mean_residual(x) / surv;
      case TailDomain::None:
        throw std::invalid_argument(
            "von_mises_diagnostic: no domain declared");
    }
    return 0.0;
  }

  // Central-regime parameters at quantile level p.  theta defaults to 1
  // (finite positive density); the Chanda family at p = 1/2 gets its exact
  // theta = 1/(eta+1), M = 2^theta values.
  CentralRegime central_regime(double p, std::optional<double> theta_opt =
                                             std::nullopt) const {
    if (!(p > 0.0 && p < 1.0))
      throw std::domain_error("central_regime: p outside (0,1)");
    CentralRegime c;
    c.p = p;
    c.x_p = quantile(p);
    c.f_xp = pdf(c.x_p);
    if (family_ == Family::Chanda && p == 0.5) {
      c.theta = 1.0 / (eta_ + 1.0);
      c.M = std::pow(2.0, c.theta);
      return c;
    }
    c.theta = theta_opt.value_or(1.0);
    if (c.theta == 1.0) {
      if (!(c.f_xp > 0.0) || !std::isfinite(c.f_xp))
        throw std::domain_error(
            "central_regime: density at x_p not finite positive");
      c.M = 1.0 / c.f_xp;
    } else {
      // finite-difference estimate of the local quantile growth constant
      double h = 1e-8;
      c.M = std::fabs(quantile(p + h) - quantile(p)) / std::pow(h, c.theta);
    }
    return c;
  }

 private:
  explicit Distribution(Family f) : family_(f) {}

  double table_quantile(double u) const {
    auto it = std::lower_bound(
        table_.begin(), table_.end(), u,
        [](const std::pair<double, double>& row, double v) {
          return row.first < v;
        });
    if (it == table_.begin()) return it->second;
    if (it == table_.end()) return table_.back().second;
    auto prev = std::prev(it);
    double du = it->first - prev->first;
    double w = (u - prev->first) / du;
    return prev->second + w * (it->second - prev->second);
  }

  // cdf by bracketed bisection on the interpolated quantile function.
  double table_cdf(double x) const {
    if (x <= table_.front().second) return x < table_.front().second ? 0.0
                                                                     : 0.0;
    if (x >= table_.back().second) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      if (table_quantile(mid) <= x) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  }

  double mean_residual_quadrature(double x, double F) const {
    // upper integration limit: finite endpoint, or the 1 - 1e-12 quantile
    Endpoint up = support().upper;
    double hi = up.finite() ? up.value : quantile(1.0 - 1e-12);
    if (!(hi > x))
      throw std::domain_error("mean_residual: empty tail above x");
    auto surv = [this](double t) { return 1.0 - cdf(t); };
    double integral = quad::integrate(surv, x, hi, 1e-8, 0.0);
    if (!std::isfinite(integral))
      throw std::domain_error("mean_residual: divergent tail mean");
    return integral / (1.0 - F);
  }

  Family family_;
  double lambda_ = 1.0;
  double alpha_ = 1.0;
  double eta_ = 0.0;
  double x1_ = 1.0;
  std::vector<std::pair<double, double>> table_;
};

// Norming constants for the three regimes:
//   central:      a = x_p, spacings scale c = 1/(n f(x_p)),
//                 center scale b = sqrt(p(1-p))/(sqrt(n) f(x_p)),
//                 t = sqrt(p(1-p)/n);
//   intermediate: a = F^{-1}(k/n), c = 1/(n f(a)), b = c sqrt(n-k);
//   extreme:      domain-specific (a, b) with spacings sharing scale b.
inline NormingConstants norming_constants(
    const Distribution& dist, std::size_t n, std::size_t k, Regime regime,
    const CentralRegime* central = nullptr) {
  if (k < 1 || k > n)
    throw std::domain_error("norming_constants: k outside [1, n]");
  NormingConstants nc;
  nc.regime = regime;
  nc.n = n;
  nc.k = k;
  const double nd = static_cast<double>(n);
  switch (regime) {
    case Regime::Central: {
      if (central == nullptr)
        throw std::domain_error("norming_constants: central regime params");
      double p = central->p, f = central->f_xp;
      nc.a_n = central->x_p;
      nc.t_n = std::sqrt(p * (1.0 - p) / nd);
      if (central->theta == 1.0) {
        if (!(f > 0.0) || !std::isfinite(f))
          throw std::domain_error(
              "norming_constants: f(x_p) not finite positive");
        nc.c_n = 1.0 / (nd * f);
        nc.b_n = *nc.t_n / f;
      } else {
        // scaling comes from (theta, M); the density at x_p is degenerate
        nc.c_n = std::numeric_limits<double>::quiet_NaN();
        nc.b_n = std::numeric_limits<double>::quiet_NaN();
      }
      break;
    }
    case Regime::Intermediate: {
      double a = dist.quantile(static_cast<double>(k) / nd);
      double f = dist.pdf(a);
      if (!(f > 0.0) || !std::isfinite(f))
        throw std::domain_error(
            "norming_constants: f(a_n) not finite positive");
      nc.a_n = a;
      nc.c_n = 1.0 / (nd * f);
      nc.b_n = nc.c_n * std::sqrt(static_cast<double>(n - k));
      break;
    }
    case Regime::Extreme: {
      DomainInfo info = dist.domain_info();
      double q = dist.quantile(1.0 - 1.0 / nd);
      switch (info.domain) {
        case TailDomain::Frechet:
          nc.a_n = 0.0;
          nc.b_n = q;
          break;
        case TailDomain::Weibull: {
          Endpoint up = dist.support().upper;
          if (!up.finite())
            throw std::domain_error(
                "norming_constants: Weibull domain needs finite endpoint");
          nc.a_n = up.value;
          nc.b_n = up.value - q;
          break;
        }
        case TailDomain::Gumbel:
          nc.a_n = q;
          nc.b_n = dist.mean_residual(q);
          break;
        case TailDomain::None:
          throw std::domain_error(
              "norming_constants: extreme regime needs a declared domain");
      }
      nc.c_n = nc.b_n;
      break;
    }
  }
  return nc;
}

}  // namespace spacings

#endif  // SPACINGS_DISTRIBUTIONS_HPP
