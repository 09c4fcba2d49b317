#ifndef SPACINGS_DETAIL_QUADRATURE_HPP
#define SPACINGS_DETAIL_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Adaptive Gauss-Kronrod (15|7) quadrature on finite intervals, with a
// rational map for integrals over [a, infinity).

namespace spacings::quad {

namespace detail {
// 15-point Kronrod nodes/weights on [-1,1]; embedded 7-point Gauss weights.
inline constexpr double xk[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
inline constexpr double wk[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};
inline constexpr double wg[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = wk[0] * fc, resg = wg[0] * fc;
  for (int j = 1; j < 8; ++j) {
    double fv = f(c - h * xk[j]) + f(c + h * xk[j]);
    resk += wk[j] * fv;
    if (j % 2 == 0) resg += wg[j / 2] * fv;
  }
  result = resk * h;
  err = std::fabs((resk - resg) * h);
}
}  // namespace detail

struct IntervalEstimate {
  double a, b, value, error;
};

// Integrate f over [a, b] until the summed Kronrod error estimate meets
// rel_tol * |integral| + abs_tol, by repeatedly bisecting the worst interval.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-14, std::size_t max_intervals = 2000) {
  if (!(b > a)) return 0.0;
  std::vector<IntervalEstimate> segs;
  IntervalEstimate s{a, b, 0.0, 0.0};
  detail::gk15(f, a, b, s.value, s.error);
  segs.push_back(s);
  while (segs.size() < max_intervals) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      err += segs[i].error;
      if (segs[i].error > segs[worst].error) worst = i;
    }
    if (err <= rel_tol * std::fabs(total) + abs_tol) return total;
    IntervalEstimate w = segs[worst];
    double mid = 0.5 * (w.a + w.b);
    if (mid <= w.a || mid >= w.b) return total;  // interval exhausted
    IntervalEstimate l{w.a, mid, 0.0, 0.0}, r{mid, w.b, 0.0, 0.0};
    detail::gk15(f, l.a, l.b, l.value, l.error);
    detail::gk15(f, r.a, r.b, r.value, r.error);
    segs[worst] = l;
    segs.push_back(r);
  }
  double total = 0.0;
  for (const auto& seg : segs) total += seg.value;
  return total;
}

// Integral over [a, infinity): substitute x = a + t/(1-t), t in (0,1).
template <class F>
double integrate_to_inf(const F& f, double a, double rel_tol = 1e-10,
                        double abs_tol = 1e-14) {
  auto g = [&](double t) {
    double om = 1.0 - t;
    double x = a + t / om;
    return f(x) / (om * om);
  };
  return integrate(g, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace spacings::quad

#endif  // SPACINGS_DETAIL_QUADRATURE_HPP
