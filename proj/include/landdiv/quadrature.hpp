#pragma once

#include <cmath>
#include <cstddef>

#include "landdiv/errors.hpp"

namespace landdiv {

struct QuadratureConfig {
  double abs_tol = 1e-8;
  int max_depth = 40;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// on [-1, 1] (QUADPACK constants).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
void gauss_kronrod_15(const F& f, double a, double b, double& kronrod,
                      double& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double f1 = f(c - dx);
    const double f2 = (i == 7) ? f1 : f(c + dx);
    const double fsum = (i == 7) ? f1 : f1 + f2;
    resk += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) resg += kGaussWeights[i / 2] * fsum;
  }
  kronrod = resk * h;
  err = std::abs((resk - resg) * h);
}

template <typename F>
double integrate_adaptive_impl(const F& f, double a, double b, double tol,
                               int depth) {
  double value, err;
  gauss_kronrod_15(f, a, b, value, err);
  if (err <= tol || std::abs(b - a) < 1e-15) return value;
  if (depth <= 0)
    throw NumericalError("adaptive quadrature did not reach tolerance");
  const double m = 0.5 * (a + b);
  return integrate_adaptive_impl(f, a, m, 0.5 * tol, depth - 1) +
         integrate_adaptive_impl(f, m, b, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute
/// tolerance cfg.abs_tol. Throws NumericalError on non-convergence.
template <typename F>
double integrate_adaptive(const F& f, double a, double b,
                          const QuadratureConfig& cfg = {}) {
  if (a == b) return 0.0;
  return detail::integrate_adaptive_impl(f, a, b, cfg.abs_tol, cfg.max_depth);
}

} // namespace landdiv
