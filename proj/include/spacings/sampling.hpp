#ifndef SPACINGS_SAMPLING_HPP
#define SPACINGS_SAMPLING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spacings/distributions.hpp"
#include "spacings/rng.hpp"

// Exact simulation of the order-statistic window X_{k-s:n}, ..., X_{k+r:n}
// and extraction/normalization of its adjacent spacings.  The windowed
// samplers (top-down, beta-pivot) avoid materializing all n variates.

namespace spacings {

enum class WindowMethod { FullSort, TopDown, BetaPivot };

struct WindowSample {
  std::size_t n = 0, k = 0, r = 0, s = 0;
  std::vector<double> values;  // positions k-s, ..., k+r (nondecreasing)
  std::uint64_t seed = 0;
  WindowMethod method = WindowMethod::FullSort;

  double at_rank(std::size_t rank) const {  // rank in [k-s, k+r]
    return values.at(rank - (k - s));
  }
  double center() const { return values[s]; }
};

struct SpacingsVector {
  double center = 0.0;
  std::vector<double> right;  // right[j-1] = X_{k+j:n} - X_{k+j-1:n}
  std::vector<double> left;   // left[j-1]  = X_{k-j+1:n} - X_{k-j:n}
};

namespace detail {

// Order statistics of n uniforms restricted to the window, via full sort.
inline std::vector<double> uniform_window_full_sort(std::size_t n,
                                                    std::size_t k,
                                                    std::size_t r,
                                                    std::size_t s,
                                                    RngStream& rng) {
  std::vector<double> u(n);
  for (auto& v : u) v = rng.u01();
  std::sort(u.begin(), u.end());
  return {u.begin() + static_cast<std::ptrdiff_t>(k - s - 1),
          u.begin() + static_cast<std::ptrdiff_t>(k + r)};
}

// Malmquist recursion from the top: U_{n:n} = V^{1/n},
// U_{j-1:n} = U_{j:n} V^{1/(j-1)}.  Requires the window to reach rank n.
inline std::vector<double> uniform_window_top_down(std::size_t n,
                                                   std::size_t k,
                                                   std::size_t r,
                                                   std::size_t s,
                                                   RngStream& rng) {
  if (k + r != n)
    throw std::invalid_argument(
        "sample_window: top-down requires a window anchored at the top");
  std::size_t len = r + s + 1;
  std::vector<double> u(len);
  double cur = std::pow(rng.u01(), 1.0 / static_cast<double>(n));
  u[len - 1] = cur;
  for (std::size_t j = 1; j < len; ++j) {
    cur *= std::pow(rng.u01(), 1.0 / static_cast<double>(n - j));
    u[len - 1 - j] = cur;
  }
  return u;
}

// Pivot at the lowest window rank: U_{k-s:n} ~ Beta(k-s, n-k+s+1) by
// quantile inversion, then the r+s smallest of the n-(k-s) uniforms above
// it via the mirrored top-down recursion.
inline std::vector<double> uniform_window_beta_pivot(std::size_t n,
                                                     std::size_t k,
                                                     std::size_t r,
                                                     std::size_t s,
                                                     RngStream& rng) {
  std::size_t lo_rank = k - s;
  double pivot = special::beta_quantile(
      static_cast<double>(lo_rank), static_cast<double>(n - lo_rank + 1),
      rng.u01());
  std::size_t m = n - lo_rank;  // uniforms above the pivot
  std::size_t len = r + s + 1;
  std::vector<double> u(len);
  u[0] = pivot;
  double w = 1.0;  // descending maxima of the mirrored uniforms
  for (std::size_t i = 1; i < len; ++i) {
    w *= std::pow(rng.u01(), 1.0 / static_cast<double>(m - i + 1));
    u[i] = 1.0 - (1.0 - pivot) * w;
  }
  return u;
}

}  // namespace detail

// One exact draw of the window X_{k-s:n}, ..., X_{k+r:n} from dist.
inline WindowSample sample_window(const Distribution& dist, std::size_t n,
                                  std::size_t k, std::size_t r, std::size_t s,
                                  WindowMethod method, RngStream& rng) {
  if (k < 1 || k > n || s >= k || k + r > n)
    throw std::domain_error("sample_window: need 1 <= k-s and k+r <= n");
  std::vector<double> u;
  switch (method) {
    case WindowMethod::FullSort:
      u = detail::uniform_window_full_sort(n, k, r, s, rng);
      break;
    case WindowMethod::TopDown:
      u = detail::uniform_window_top_down(n, k, r, s, rng);
      break;
    case WindowMethod::BetaPivot:
      u = detail::uniform_window_beta_pivot(n, k, r, s, rng);
      break;
  }
  WindowSample w;
  w.n = n;
  w.k = k;
  w.r = r;
  w.s = s;
  w.method = method;
  w.values.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w.values[i] = dist.quantile(u[i]);
  return w;
}

// Adjacent spacings on each side of the center.  Floating-point ties are
// kept as zero spacings, never perturbed.
inline SpacingsVector spacings(const WindowSample& w) {
  SpacingsVector sv;
  sv.center = w.values[w.s];
  sv.right.resize(w.r);
  sv.left.resize(w.s);
  for (std::size_t j = 1; j <= w.r; ++j)
    sv.right[j - 1] = w.values[w.s + j] - w.values[w.s + j - 1];
  for (std::size_t j = 1; j <= w.s; ++j)
    sv.left[j - 1] = w.values[w.s - j + 1] - w.values[w.s - j];
  return sv;
}

// Rebuilds the window values by cumulative summation outward from the
// center, mirroring the construction order in spacings().
inline std::vector<double> reconstruct_window(const SpacingsVector& sv) {
  std::vector<double> out(sv.left.size() + sv.right.size() + 1);
  std::size_t c = sv.left.size();
  out[c] = sv.center;
  double acc = sv.center;
  for (std::size_t j = 0; j < sv.right.size(); ++j) {
    acc += sv.right[j];
    out[c + 1 + j] = acc;
  }
  acc = sv.center;
  for (std::size_t j = 0; j < sv.left.size(); ++j) {
    acc -= sv.left[j];
    out[c - 1 - j] = acc;
  }
  return out;
}

struct NormalizedWindow {
  double center = 0.0;
  std::vector<double> right, left;
};

// Central part (b) uses the Weibull-renewal scaling n^theta Delta / M and
// the half-normal transform of the center; all other paths share the
// (X - a_n)/b_n, Delta/c_n pattern.  With gumbel_per_rank set, the spacing
// below rank i additionally picks up the factor (n - i + 1).
inline NormalizedWindow normalize(const SpacingsVector& sv,
                                  const NormingConstants& nc,
                                  const CentralRegime* central = nullptr,
                                  bool gumbel_per_rank = false) {
  NormalizedWindow out;
  const double nd = static_cast<double>(nc.n);
  const bool central_b =
      nc.regime == Regime::Central && central != nullptr &&
      central->theta != 1.0;
  if (nc.regime == Regime::Central && central == nullptr)
    throw std::domain_error("normalize: central regime needs its parameters");
  if (central_b) {
    const double th = central->theta, M = central->M;
    const double npow = std::pow(nd, th);
    out.center = std::sqrt(nd / (central->p * (1.0 - central->p))) *
                 std::pow(std::fabs((sv.center - central->x_p) / M), 1.0 / th);
    out.right.resize(sv.right.size());
    out.left.resize(sv.left.size());
    for (std::size_t j = 0; j < sv.right.size(); ++j)
      out.right[j] = npow * sv.right[j] / M;
    for (std::size_t j = 0; j < sv.left.size(); ++j)
      out.left[j] = npow * sv.left[j] / M;
    return out;
  }
  out.center = (sv.center - nc.a_n) / nc.b_n;
  out.right.resize(sv.right.size());
  out.left.resize(sv.left.size());
  for (std::size_t j = 0; j < sv.right.size(); ++j) {
    double scale = 1.0 / nc.c_n;
    if (gumbel_per_rank)
      scale *= static_cast<double>(nc.n - (nc.k + j + 1) + 1);
    out.right[j] = sv.right[j] * scale;
  }
  for (std::size_t j = 0; j < sv.left.size(); ++j) {
    double scale = 1.0 / nc.c_n;
    if (gumbel_per_rank)
      scale *= static_cast<double>(nc.n - (nc.k - j) + 1);
    out.left[j] = sv.left[j] * scale;
  }
  return out;
}

}  // namespace spacings

#endif  // SPACINGS_SAMPLING_HPP
