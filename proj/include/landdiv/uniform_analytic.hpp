#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "landdiv/composition.hpp"
#include "landdiv/quadrature.hpp"

namespace landdiv {

// Per-coordinate slice interval [m_{k,a}, M_{k,a}] of the hyperplane
// {A = a} cut with the projected simplex; empty when lower > upper.
struct SliceBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool empty() const { return lower > upper; }
};

/// Marginal density of one coordinate under the uniform distribution on
/// the simplex with `covers` parts: (covers-1)(1-p)^(covers-2).
double marginal_density_uniform(double p, int covers);

/// Exact E[H] under uniformity on the simplex with `covers` parts.
double expected_shannon_uniform(int covers);

/// Exact E[A]: the arithmetic mean of the weights.
double expected_appropriation_uniform(const WeightVector& w);

/// Density of the appropriation A at a, via nested adaptive quadrature.
/// Zero outside [w_1, w_n].
double appropriation_density_uniform(double a, const WeightVector& w,
                                     const QuadratureConfig& cfg = {});

// Bounds of the next free coordinate p_{k+1} (k = prefix.size()) on the
// slice {A = a}, given the already fixed coordinates `prefix`.
SliceBounds slice_bounds(double a, const WeightVector& w,
                         std::span<const double> prefix);

// Recover the full composition on the slice {A = a} from the free
// coordinates p_1..p_{n-2} (for n covers).
Composition slice_point(double a, const WeightVector& w,
                        std::span<const double> free_coords);

enum class ConditionalMethod { kQuadrature, kMonteCarlo };

struct ConditionalConfig {
  QuadratureConfig quadrature{1e-8, 40};
  std::size_t mc_samples = 200000;
  std::uint64_t mc_seed = 20240901;
};

/// E[H | A = a] under the uniform distribution, for w_1 < a < w_n.
double conditional_expectation_uniform(
    double a, const WeightVector& w,
    ConditionalMethod method = ConditionalMethod::kQuadrature,
    const ConditionalConfig& cfg = {});

/// Same slice average for an arbitrary index of the full composition.
double conditional_expectation_uniform_of(
    double a, const WeightVector& w,
    const std::function<double(const Composition&)>& index,
    ConditionalMethod method = ConditionalMethod::kQuadrature,
    const ConditionalConfig& cfg = {});

/// i.i.d. points uniform on the slice {A = a}, by rejection inside the
/// coordinate box. Every sample satisfies |appropriation - a| <= 1e-9.
std::vector<Composition> sample_uniform_slice(double a, const WeightVector& w,
                                              std::size_t count,
                                              std::uint64_t seed);

} // namespace landdiv
