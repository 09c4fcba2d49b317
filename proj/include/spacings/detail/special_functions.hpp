#ifndef SPACINGS_DETAIL_SPECIAL_FUNCTIONS_HPP
#define SPACINGS_DETAIL_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

// Scalar special functions used by the distribution and test code:
// regularized incomplete gamma/beta and their inverses, the normal
// cdf/quantile pair, and the Kolmogorov statistic distribution.

namespace spacings::special {

inline constexpr double euler_gamma = 0.5772156649015329;

inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Acklam's rational approximation refined with one Halley step;
// accurate to ~1e-15 over (0,1).
inline double normal_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("normal_quantile: p outside [0,1]");
  if (p == 0.0) return -std::numeric_limits<double>::infinity();
  if (p == 1.0) return std::numeric_limits<double>::infinity();

  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};

  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement against the erfc-based cdf.
  double e = normal_cdf(x) - p;
  double u = e / normal_pdf(x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

// Regularized lower incomplete gamma P(a, x); series for x < a+1,
// Lentz continued fraction otherwise.
inline double gamma_p(double a, double x) {
  if (a <= 0.0) throw std::domain_error("gamma_p: a must be positive");
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // continued fraction for Q(a,x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

inline double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

// Inverse of P(a, .) by Newton iteration from a Wilson-Hilferty start.
inline double gamma_quantile(double a, double p) {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("gamma_quantile: p outside [0,1)");
  if (p == 0.0) return 0.0;
  double g = std::lgamma(a);
  double x;
  {
    double t = normal_quantile(p);
    double w = 1.0 - 1.0 / (9.0 * a) + t / (3.0 * std::sqrt(a));
    x = a * w * w * w;
    if (x <= 0.0) x = a * std::exp((std::log(p) + g + std::log(a)) / a);
  }
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100; ++it) {
    double f = gamma_p(a, x) - p;
    if (f > 0.0) hi = x; else lo = x;
    double dens = std::exp((a - 1.0) * std::log(x) - x - g);
    double dx = f / dens;
    double xn = x - dx;
    if (!(xn > lo && xn < hi)) xn = std::isinf(hi) ? 2.0 * x : 0.5 * (lo + hi);
    if (std::fabs(xn - x) <= 1e-14 * (1.0 + std::fabs(x))) { x = xn; break; }
    x = xn;
  }
  return x;
}

namespace detail {
inline double beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h;
}
}  // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double beta_inc(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::beta_cf(a, b, x) / a;
  return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

// Inverse of I_x(a, b): safeguarded Newton, |I_x - p| driven below 1e-12.
inline double beta_quantile(double a, double b, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("beta_quantile: p outside [0,1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  // normal approximation start
  double x;
  {
    double mean = a / (a + b);
    double var = a * b / ((a + b) * (a + b) * (a + b + 1.0));
    x = mean + normal_quantile(p) * std::sqrt(var);
    if (x <= 0.0 || x >= 1.0) x = mean;
  }
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double f = beta_inc(a, b, x) - p;
    if (std::fabs(f) < 1e-13) break;
    if (f > 0.0) hi = x; else lo = x;
    double dens =
        std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta);
    double xn = x - f / dens;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::fabs(xn - x) <= 1e-16 * (1.0 + std::fabs(x))) { x = xn; break; }
    x = xn;
  }
  return x;
}

// Survival function of the Kolmogorov statistic,
// Q(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2), terms dropped below 1e-12.
inline double kolmogorov_survival(double t) {
  if (t <= 0.0) return 1.0;
  double sum = 0.0, sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    double term = std::exp(-2.0 * j * j * t * t);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  double q = 2.0 * sum;
  if (q < 0.0) q = 0.0;
  if (q > 1.0) q = 1.0;
  return q;
}

// Upper-tail chi-square p-value with nu degrees of freedom.
inline double chi_square_survival(double x, double nu) {
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * nu, 0.5 * x);
}

}  // namespace spacings::special

#endif  // SPACINGS_DETAIL_SPECIAL_FUNCTIONS_HPP
