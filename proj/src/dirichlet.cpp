#include "landdiv/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "landdiv/errors.hpp"
#include "landdiv/special.hpp"

namespace landdiv {

DirichletParams::DirichletParams(std::vector<double> a) : alpha(std::move(a)) {
  if (alpha.empty())
    throw std::invalid_argument("DirichletParams: empty alpha");
  for (double aj : alpha)
    if (!(aj > 0.0))
      throw std::invalid_argument("DirichletParams: alpha must be > 0");
}

namespace dirichlet {

double log_density(const DirichletParams& params, const Composition& x) {
  if (params.size() != x.size())
    throw std::invalid_argument("dirichlet log_density: length mismatch");
  double alpha0 = 0.0, log_beta = 0.0, shape_term = 0.0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    const double aj = params.alpha[j];
    alpha0 += aj;
    log_beta += log_gamma(aj);
    const double xj = x[j];
    if (xj > 0.0) {
      shape_term += (aj - 1.0) * std::log(xj);
    } else if (aj < 1.0) {
      throw std::domain_error(
          "dirichlet log_density: boundary point with alpha < 1");
    } else if (aj > 1.0) {
      return -std::numeric_limits<double>::infinity();
    }
  }
  log_beta -= log_gamma(alpha0);
  return -log_beta + shape_term;
}

Composition sample_one(const DirichletParams& params, Rng& rng) {
  std::vector<double> g(params.size());
  double total = 0.0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    g[j] = rng.gamma(params.alpha[j]);
    total += g[j];
  }
  for (double& v : g) v /= total;
  return Composition(std::move(g));
}

std::vector<Composition> sample(const DirichletParams& params,
                                std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sample_one(params, rng));
  return out;
}

namespace {

constexpr double kZeroClamp = 1e-10;

std::vector<double> clamped_parts(const Composition& c) {
  std::vector<double> p = c.parts();
  double s = 0.0;
  for (double& v : p) {
    if (v < kZeroClamp) v = kZeroClamp;
    s += v;
  }
  for (double& v : p) v /= s;
  return p;
}

} // namespace

DirichletParams mle_fit(std::span<const Composition> sample, double tol,
                        int max_iter) {
  const std::size_t count = sample.size();
  if (count < 3)
    throw std::invalid_argument("dirichlet mle_fit: need at least 3 points");
  const std::size_t dim = sample.front().size();

  std::vector<double> mean(dim, 0.0), mean_sq(dim, 0.0), mean_log(dim, 0.0);
  for (const Composition& c : sample) {
    if (c.size() != dim)
      throw std::invalid_argument("dirichlet mle_fit: ragged sample");
    const std::vector<double> p = clamped_parts(c);
    for (std::size_t j = 0; j < dim; ++j) {
      mean[j] += p[j];
      mean_sq[j] += p[j] * p[j];
      mean_log[j] += std::log(p[j]);
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    mean[j] /= static_cast<double>(count);
    mean_sq[j] /= static_cast<double>(count);
    mean_log[j] /= static_cast<double>(count);
  }

  // Method-of-moments initialization: alpha0 from the first coordinate
  // with non-degenerate variance.
  double alpha0 = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double var = mean_sq[j] - mean[j] * mean[j];
    if (var > 1e-14) {
      alpha0 = mean[j] * (1.0 - mean[j]) / var - 1.0;
      break;
    }
  }
  if (alpha0 <= 0.0)
    throw NumericalError("dirichlet mle_fit: degenerate sample");

  std::vector<double> alpha(dim);
  for (std::size_t j = 0; j < dim; ++j)
    alpha[j] = std::max(1e-6, mean[j] * alpha0);

  for (int it = 0; it < max_iter; ++it) {
    double sum_alpha = 0.0;
    for (double aj : alpha) sum_alpha += aj;
    if (sum_alpha > 1e8)
      throw NumericalError("dirichlet mle_fit: diverging (degenerate sample)");
    const double psi_sum = digamma(sum_alpha);
    for (std::size_t j = 0; j < dim; ++j)
      alpha[j] = inverse_digamma(psi_sum + mean_log[j]);
    // Convergence is measured on the first-order conditions with the
    // updated alphas and their own sum.
    double new_sum = 0.0;
    for (double aj : alpha) new_sum += aj;
    const double psi_new = digamma(new_sum);
    double residual = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      residual = std::max(
          residual, std::abs(digamma(alpha[j]) - psi_new - mean_log[j]));
    if (residual <= tol) return DirichletParams(alpha);
  }
  throw NumericalError("dirichlet mle_fit: no convergence within max_iter");
}

double log_likelihood(const DirichletParams& params,
                      std::span<const Composition> sample) {
  double ll = 0.0;
  for (const Composition& c : sample)
    ll += log_density(params, Composition(clamped_parts(c)));
  return ll;
}

} // namespace dirichlet
} // namespace landdiv
