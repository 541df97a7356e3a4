#include "landdiv/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landdiv {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: x must be > 0");
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: x must be > 0");
  double result = 0.0;
  // Shift the argument up until the asymptotic series converges fast.
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k}), eight terms.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  static const double coeff[8] = {
      1.0 / 12.0,        -1.0 / 120.0,      1.0 / 252.0,  -1.0 / 240.0,
      1.0 / 132.0,       -691.0 / 32760.0,  1.0 / 12.0,   -3617.0 / 8160.0};
  double pw = inv2;
  for (int k = 0; k < 8; ++k) {
    series += coeff[k] * pw;
    pw *= inv2;
  }
  return result + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("trigamma: x must be > 0");
  double result = 0.0;
  while (x < 6.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2k} / x^{2k+1}.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  static const double coeff[7] = {1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,
                                  -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0,
                                  7.0 / 6.0};
  double pw = inv2 * inv;
  for (int k = 0; k < 7; ++k) {
    series += coeff[k] * pw;
    pw *= inv2;
  }
  return result + inv + 0.5 * inv2 + series;
}

double inverse_digamma(double y) {
  // Initial guess from Minka's note on estimating a Dirichlet distribution.
  double x = y >= -2.22 ? std::exp(y) + 0.5 : -1.0 / (y + kEulerMascheroni);
  for (int i = 0; i < 8; ++i) {
    x -= (digamma(x) - y) / trigamma(x);
    if (x <= 0.0) x = 1e-12;
  }
  return x;
}

std::vector<double> bernoulli_numbers(int count) {
  if (count < 1) throw std::invalid_argument("bernoulli_numbers: count >= 1");
  std::vector<double> b(static_cast<std::size_t>(count));
  b[0] = 1.0;
  for (int r = 1; r < count; ++r) {
    // factor r!/(k!(r+1-k)!) accumulated incrementally
    double sum = 0.0;
    for (int k = 0; k < r; ++k) {
      double f = 1.0;
      for (int t = k + 1; t <= r; ++t) f *= t;         // r!/k!
      for (int t = 2; t <= r + 1 - k; ++t) f /= t;     // / (r+1-k)!
      sum += f * b[static_cast<std::size_t>(k)];
    }
    b[static_cast<std::size_t>(r)] = -sum;
  }
  return b;
}

} // namespace landdiv
