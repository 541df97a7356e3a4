#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "landdiv/composition.hpp"
#include "landdiv/rng.hpp"

namespace landdiv {

/// Dirichlet parameter vector; every component strictly positive.
struct DirichletParams {
  std::vector<double> alpha;

  explicit DirichletParams(std::vector<double> a);
  std::size_t size() const { return alpha.size(); }
};

namespace dirichlet {

// Log density of x under Dirichlet(alpha), with respect to Lebesgue
// measure on the projected simplex. Returns -inf on the boundary when the
// corresponding alpha_j > 1; throws when alpha_j < 1 there (density
// diverges).
double log_density(const DirichletParams& params, const Composition& x);

/// `count` i.i.d. Dirichlet draws via normalized gamma variates.
std::vector<Composition> sample(const DirichletParams& params,
                                std::size_t count, std::uint64_t seed);

/// Single draw reusing a caller-owned generator.
Composition sample_one(const DirichletParams& params, Rng& rng);

// Maximum likelihood fit by the fixed-point iteration
//   psi(alpha_j) = psi(sum alpha) + mean log x_j,
// inverted with Newton steps on the digamma, initialized from moments.
// Points with zero coordinates are clamped to 1e-10 and renormalized.
DirichletParams mle_fit(std::span<const Composition> sample, double tol = 1e-10,
                        int max_iter = 1000);

/// Sum of log densities over the sample (fit diagnostic).
double log_likelihood(const DirichletParams& params,
                      std::span<const Composition> sample);

} // namespace dirichlet
} // namespace landdiv
