#include "landdiv/uniform_analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "landdiv/errors.hpp"
#include "landdiv/special.hpp"

namespace landdiv {

double marginal_density_uniform(double p, int covers) {
  if (covers < 2)
    throw std::invalid_argument("marginal_density_uniform: covers >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("marginal_density_uniform: p outside [0,1]");
  return (covers - 1) * std::pow(1.0 - p, covers - 2);
}

double expected_shannon_uniform(int covers) {
  if (covers < 2)
    throw std::invalid_argument("expected_shannon_uniform: covers >= 2");
  const double n = static_cast<double>(covers);
  return (digamma(n) + kEulerMascheroni - 1.0 + 1.0 / n) / std::log(n);
}

double expected_appropriation_uniform(const WeightVector& w) {
  double s = 0.0;
  for (double wi : w.weights()) s += wi;
  return s / static_cast<double>(w.size());
}

namespace {

// Inner integral of the appropriation density in the transformed
// coordinates v_k = s_k p_k. `level` is the paper's k (2-based); t_plain
// and t_scaled accumulate sum v_i and sum v_i (s_1-s_i)/(s_1 s_i).
double density_level(const std::vector<double>& s, double v1, std::size_t level,
                     double t_plain, double t_scaled, double constant,
                     const QuadratureConfig& cfg) {
  const std::size_t n = s.size();
  const double s1 = s[0];
  const double sk = s[level - 1];
  const double cap_simplex = v1 - t_plain;
  const double cap_plane = (s1 * sk) / (s1 - sk) * (1.0 - v1 / s1 - t_scaled);
  const double m_k = std::min(cap_simplex, cap_plane);
  if (m_k <= 0.0) return 0.0;
  if (level == n) return constant * m_k;
  auto inner = [&](double vk) {
    return density_level(s, v1, level + 1, t_plain + vk,
                         t_scaled + vk * (s1 - sk) / (s1 * sk), constant, cfg);
  };
  return integrate_adaptive(inner, 0.0, m_k, cfg);
}

} // namespace

double appropriation_density_uniform(double a, const WeightVector& w,
                                     const QuadratureConfig& cfg) {
  const std::size_t covers = w.size();
  if (covers < 2)
    throw std::invalid_argument("appropriation_density_uniform: >= 2 covers");
  if (a < w.min() || a > w.max()) return 0.0;
  const std::size_t n = covers - 1;
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = w.max() - w[i];
  double constant = 1.0; // n! / prod s_i
  for (std::size_t i = 1; i <= n; ++i) constant *= static_cast<double>(i) / s[i - 1];
  const double v1 = w.max() - a;
  if (n == 1) return constant;
  return density_level(s, v1, 2, 0.0, 0.0, constant, cfg);
}

SliceBounds slice_bounds(double a, const WeightVector& w,
                         std::span<const double> prefix) {
  const std::size_t covers = w.size();
  if (covers < 3)
    throw std::invalid_argument("slice_bounds: needs >= 3 covers");
  if (a < w.min() || a > w.max())
    throw std::invalid_argument("slice_bounds: a outside [w_1, w_n]");
  const std::size_t k = prefix.size(); // 0-based index of the free coord
  if (k > covers - 3)
    throw std::invalid_argument("slice_bounds: prefix too long");
  double num_m = w[k + 1] - a;
  double num_M = w.back() - a;
  for (std::size_t i = 0; i < k; ++i) {
    num_m -= (w[k + 1] - w[i]) * prefix[i];
    num_M -= (w.back() - w[i]) * prefix[i];
  }
  SliceBounds b;
  b.lower = std::max(0.0, num_m / (w[k + 1] - w[k]));
  b.upper = num_M / (w.back() - w[k]);
  return b;
}

Composition slice_point(double a, const WeightVector& w,
                        std::span<const double> free_coords) {
  const std::size_t covers = w.size();
  if (covers < 2) throw std::invalid_argument("slice_point: >= 2 covers");
  if (free_coords.size() != covers - 2)
    throw std::invalid_argument("slice_point: wrong number of free coords");
  std::vector<double> p(covers);
  double weighted = 0.0, total = 0.0;
  for (std::size_t i = 0; i + 2 < covers; ++i) {
    p[i] = free_coords[i];
    weighted += (w.back() - w[i]) * p[i];
    total += p[i];
  }
  const std::size_t second_last = covers - 2;
  p[second_last] =
      (w.back() - a - weighted) / (w.back() - w[second_last]);
  total += p[second_last];
  p[covers - 1] = 1.0 - total;
  for (double& x : p) {
    if (x < 0.0) {
      if (x < -1e-9)
        throw NumericalError("slice_point: infeasible free coordinates");
      x = 0.0;
    }
  }
  return Composition(std::move(p));
}

namespace {

// Iterated integral of `index` over the slice, in the free coordinates.
double slice_integral(double a, const WeightVector& w,
                      const std::function<double(const Composition&)>& index,
                      std::vector<double>& prefix, std::size_t depth,
                      const QuadratureConfig& cfg) {
  const std::size_t free_dims = w.size() - 2;
  const SliceBounds b = slice_bounds(a, w, prefix);
  if (b.empty()) return 0.0;
  auto eval = [&](double pk) {
    prefix.push_back(pk);
    double v;
    if (depth + 1 == free_dims)
      v = index(slice_point(a, w, prefix));
    else
      v = slice_integral(a, w, index, prefix, depth + 1, cfg);
    prefix.pop_back();
    return v;
  };
  return integrate_adaptive(eval, b.lower, b.upper, cfg);
}

struct SliceBox {
  std::vector<SliceBounds> outer; // outer bounds per free coordinate
};

SliceBox slice_box(double a, const WeightVector& w) {
  const std::size_t free_dims = w.size() - 2;
  SliceBox box;
  box.outer.resize(free_dims);
  std::vector<double> zeros;
  box.outer[0] = slice_bounds(a, w, zeros);
  for (std::size_t k = 1; k < free_dims; ++k) {
    // M_k is maximal at an all-zero prefix; lower bound 0 is always valid.
    box.outer[k].lower = 0.0;
    box.outer[k].upper = (w.max() - a) / (w.max() - w[k]);
  }
  return box;
}

bool propose_slice_point(double a, const WeightVector& w, const SliceBox& box,
                         Rng& rng, std::vector<double>& coords) {
  const std::size_t free_dims = w.size() - 2;
  coords.clear();
  for (std::size_t k = 0; k < free_dims; ++k) {
    const double pk =
        rng.uniform(box.outer[k].lower, box.outer[k].upper);
    if (k > 0) {
      const SliceBounds b = slice_bounds(a, w, coords);
      if (b.empty() || pk < b.lower || pk > b.upper) return false;
    }
    coords.push_back(pk);
  }
  return true;
}

} // namespace

double conditional_expectation_uniform_of(
    double a, const WeightVector& w,
    const std::function<double(const Composition&)>& index,
    ConditionalMethod method, const ConditionalConfig& cfg) {
  const std::size_t covers = w.size();
  if (covers < 2)
    throw std::invalid_argument("conditional expectation: >= 2 covers");
  if (!(a > w.min() && a < w.max()))
    throw std::invalid_argument(
        "conditional expectation: a must lie strictly inside [w_1, w_n]");
  if (covers == 2) {
    std::vector<double> none;
    return index(slice_point(a, w, none));
  }
  if (method == ConditionalMethod::kQuadrature) {
    std::vector<double> prefix;
    const double num =
        slice_integral(a, w, index, prefix, 0, cfg.quadrature);
    prefix.clear();
    const double den = slice_integral(
        a, w, [](const Composition&) { return 1.0; }, prefix, 0,
        cfg.quadrature);
    if (den <= 0.0) throw NumericalError("conditional expectation: empty slice");
    return num / den;
  }
  // Monte Carlo: rejection in the coordinate box, average over accepted.
  const SliceBox box = slice_box(a, w);
  Rng rng(cfg.mc_seed);
  std::vector<double> coords;
  double sum = 0.0;
  std::size_t accepted = 0;
  for (std::size_t t = 0; t < cfg.mc_samples; ++t) {
    if (!propose_slice_point(a, w, box, rng, coords)) continue;
    sum += index(slice_point(a, w, coords));
    ++accepted;
  }
  if (accepted == 0)
    throw NumericalError("conditional expectation: no accepted samples");
  return sum / static_cast<double>(accepted);
}

double conditional_expectation_uniform(double a, const WeightVector& w,
                                       ConditionalMethod method,
                                       const ConditionalConfig& cfg) {
  const int base = static_cast<int>(w.size());
  return conditional_expectation_uniform_of(
      a, w, [base](const Composition& c) { return shannon_index(c, base); },
      method, cfg);
}

std::vector<Composition> sample_uniform_slice(double a, const WeightVector& w,
                                              std::size_t count,
                                              std::uint64_t seed) {
  const std::size_t covers = w.size();
  if (covers < 2)
    throw std::invalid_argument("sample_uniform_slice: >= 2 covers");
  if (count < 1)
    throw std::invalid_argument("sample_uniform_slice: count >= 1");
  if (a < w.min() || a > w.max())
    throw std::invalid_argument("sample_uniform_slice: empty slice");
  std::vector<Composition> out;
  out.reserve(count);
  Rng rng(seed);
  if (covers == 2) {
    std::vector<double> none;
    const Composition point = slice_point(a, w, none);
    out.assign(count, point);
    return out;
  }
  const SliceBox box = slice_box(a, w);
  std::vector<double> coords;
  std::size_t proposals = 0;
  const std::size_t proposal_cap = std::max<std::size_t>(1000000, count * 1000);
  while (out.size() < count) {
    if (++proposals > proposal_cap)
      throw NumericalError("sample_uniform_slice: acceptance rate too low");
    if (!propose_slice_point(a, w, box, rng, coords)) continue;
    out.push_back(slice_point(a, w, coords));
  }
  return out;
}

} // namespace landdiv
