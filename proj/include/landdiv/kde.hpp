#pragma once

#include <string>
#include <vector>

#include "landdiv/composition.hpp"

#include "json.hpp"

namespace landdiv::kde {

// Dirichlet-kernel density estimate on the simplex: one kernel per sample
// point z_i with parameters alpha_j = 1 + z_ij / lambda. Densities are
// with respect to Lebesgue measure on the projected simplex.
struct KdeModel {
  std::vector<Composition> points;
  double lambda = 0.0;
  int dim = 0;
  double eta = 1e-4;

  // Derived, filled by build(): exponents z_ij/lambda (row-major N x dim)
  // and the per-point log-gamma kernel normalizers.
  std::vector<double> exponents;
  std::vector<double> log_norm_gamma;

  std::size_t count() const { return points.size(); }
};

KdeModel build(std::vector<Composition> points, double lambda,
               double eta = 1e-4);

/// Reference evaluation path: kernel normalizers through log-gamma.
double eval_loggamma(const KdeModel& model, const Composition& x);

// Truncation plan for the Weierstrass / Euler-MacLaurin evaluation path:
// explicit terms k < m, Euler-MacLaurin tail of order s, remainder bound
// verified against epsilon = (1/dim) log(1 + eta).
struct EulerMaclaurinPlan {
  int m = 0;
  int s = 0;
  std::vector<double> bernoulli; // B_0 .. B_{2s+2}
  double epsilon = 0.0;
  double remainder_bound = 0.0;
  // Per-point log normalizers under the plan (cached for evaluation).
  std::vector<double> point_log_scale;
};

/// Smallest (m, s) with a certified remainder bound for this model.
EulerMaclaurinPlan plan_euler_maclaurin(const KdeModel& model);

/// Approximate evaluation with guarantee
/// (1+eta)^-1 <= eval_loggamma / eval_euler_maclaurin <= 1+eta.
double eval_euler_maclaurin(const KdeModel& model,
                            const EulerMaclaurinPlan& plan,
                            const Composition& x);

nlohmann::json to_json(const KdeModel& model);
KdeModel from_json(const nlohmann::json& j);

void save(const KdeModel& model, const std::string& path);
KdeModel load(const std::string& path);

namespace detail {

// Summand g(k) of the Weierstrass log-product for one (z, lambda, dim)
// triple, its closed-form derivatives, and the closed-form tail integral.
double g_value(double x, double z, double lambda, int dim);
double g_derivative(int order, double x, double z, double lambda, int dim);
double g_integral(double from, double to, double z, double lambda, int dim);
double g_integral_to_inf(double from, double z, double lambda, int dim);

} // namespace detail

} // namespace landdiv::kde
