#include "landdiv/kde.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "landdiv/errors.hpp"
#include "landdiv/special.hpp"

namespace landdiv::kde {

namespace detail {

double g_value(double x, double z, double lambda, int dim) {
  const double c = 1.0 / dim - z;
  const double b = z / lambda;
  const double d = 1.0 / lambda;
  return c / (lambda * x) + std::log1p(b / x) - std::log1p(d / x) / dim;
}

double g_derivative(int order, double x, double z, double lambda, int dim) {
  // g(x) = (c/lambda) x^-1 + log(x+b) - (1 - 1/dim) log x - (1/dim) log(x+d)
  const double c = 1.0 / dim - z;
  const double b = z / lambda;
  const double d = 1.0 / lambda;
  double fact_p = 1.0;      // order!
  double fact_pm1 = 1.0;    // (order-1)!
  for (int t = 2; t <= order; ++t) fact_p *= t;
  for (int t = 2; t <= order - 1; ++t) fact_pm1 *= t;
  const double sign_p = (order % 2 == 0) ? 1.0 : -1.0;
  const double rational = sign_p * fact_p * (c / lambda) *
                          std::pow(x, -(order + 1));
  const double logs = -sign_p * fact_pm1 *
                      (std::pow(x + b, -order) -
                       (1.0 - 1.0 / dim) * std::pow(x, -order) -
                       (1.0 / dim) * std::pow(x + d, -order));
  return rational + logs;
}

namespace {

// Antiderivative of g; the log x coefficients cancel in differences and
// in the limit x -> inf because c/lambda + b - d/dim = 0.
double g_antiderivative(double x, double z, double lambda, int dim) {
  const double c = 1.0 / dim - z;
  const double b = z / lambda;
  const double d = 1.0 / lambda;
  double v = (c / lambda) * std::log(x);
  v += x * std::log1p(b / x);
  if (b > 0.0) v += b * std::log(x + b);
  v -= (x * std::log1p(d / x) + d * std::log(x + d)) / dim;
  return v;
}

} // namespace

double g_integral(double from, double to, double z, double lambda, int dim) {
  return g_antiderivative(to, z, lambda, dim) -
         g_antiderivative(from, z, lambda, dim);
}

double g_integral_to_inf(double from, double z, double lambda, int dim) {
  const double b = z / lambda;
  const double d = 1.0 / lambda;
  return (b - d / dim) - g_antiderivative(from, z, lambda, dim);
}

} // namespace detail

KdeModel build(std::vector<Composition> points, double lambda, double eta) {
  if (points.empty()) throw std::invalid_argument("kde: empty sample");
  if (!(lambda > 0.0)) throw std::invalid_argument("kde: lambda must be > 0");
  if (!(eta > 0.0)) throw std::invalid_argument("kde: eta must be > 0");
  KdeModel model;
  model.dim = static_cast<int>(points.front().size());
  if (model.dim < 2) throw std::invalid_argument("kde: dim must be >= 2");
  for (const Composition& z : points)
    if (static_cast<int>(z.size()) != model.dim)
      throw std::invalid_argument("kde: ragged sample");
  model.points = std::move(points);
  model.lambda = lambda;
  model.eta = eta;

  const std::size_t n = model.points.size();
  const std::size_t dim = static_cast<std::size_t>(model.dim);
  model.exponents.resize(n * dim);
  model.log_norm_gamma.resize(n);
  const double lg_total = log_gamma(model.dim + 1.0 / lambda);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = lg_total;
    for (std::size_t j = 0; j < dim; ++j) {
      const double e = model.points[i][j] / lambda;
      model.exponents[i * dim + j] = e;
      norm -= log_gamma(1.0 + e);
    }
    model.log_norm_gamma[i] = norm;
  }
  return model;
}

namespace {

double eval_with_scales(const KdeModel& model,
                        const std::vector<double>& log_scale,
                        const Composition& x) {
  if (static_cast<int>(x.size()) != model.dim)
    throw std::invalid_argument("kde eval: dimension mismatch");
  const std::size_t n = model.count();
  const std::size_t dim = static_cast<std::size_t>(model.dim);

  bool boundary = false;
  double log_x[64];
  if (dim > 64) throw std::invalid_argument("kde eval: dim too large");
  for (std::size_t j = 0; j < dim; ++j) {
    if (x[j] > 0.0) {
      log_x[j] = std::log(x[j]);
    } else {
      boundary = true;
      log_x[j] = 0.0;
    }
  }

  double sum = 0.0;
  if (!boundary) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = log_scale[i];
      const double* e = &model.exponents[i * dim];
      for (std::size_t j = 0; j < dim; ++j) acc += e[j] * log_x[j];
      sum += std::exp(acc);
    }
  } else {
    // A kernel with positive exponent on a zero coordinate contributes 0.
    for (std::size_t i = 0; i < n; ++i) {
      double acc = log_scale[i];
      const double* e = &model.exponents[i * dim];
      bool zero = false;
      for (std::size_t j = 0; j < dim; ++j) {
        if (x[j] > 0.0) {
          acc += e[j] * log_x[j];
        } else if (e[j] > 0.0) {
          zero = true;
          break;
        }
      }
      if (!zero) sum += std::exp(acc);
    }
  }
  return sum / static_cast<double>(n);
}

// Condition (i) of the Euler-MacLaurin error control, checked on a
// geometric grid (heuristic; the even derivatives decay to zero, so the
// scan stops once both factors underflow).
bool same_sign_tail(double m, double z, double lambda, int dim, int s) {
  double x = m;
  for (int t = 0; t < 80; ++t) {
    const double a = detail::g_derivative(2 * s + 2, x, z, lambda, dim);
    const double b = detail::g_derivative(2 * s + 4, x, z, lambda, dim);
    if (std::abs(a) < 1e-280 && std::abs(b) < 1e-280) return true;
    if (a * b <= 0.0) return false;
    x *= 1.3;
  }
  return true;
}

} // namespace

double eval_loggamma(const KdeModel& model, const Composition& x) {
  return eval_with_scales(model, model.log_norm_gamma, x);
}

EulerMaclaurinPlan plan_euler_maclaurin(const KdeModel& model) {
  const std::size_t n = model.count();
  const std::size_t dim = static_cast<std::size_t>(model.dim);
  const double lambda = model.lambda;
  const double epsilon = std::log1p(model.eta) / model.dim;
  const std::vector<double> bern = bernoulli_numbers(9); // up to B_8

  // factorials (2s+2)! for s = 1..3
  const double fact[4] = {0.0, 24.0, 720.0, 40320.0};

  int best_m = 0, best_s = 0;
  double best_bound = 0.0;
  for (int m = 1; m <= 100 && best_m == 0; ++m) {
    for (int s = 1; s <= 3; ++s) {
      const double coeff =
          std::abs(bern[static_cast<std::size_t>(2 * s + 2)]) / fact[s];
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          worst = std::max(
              worst, std::abs(detail::g_derivative(
                         2 * s + 1, m, model.points[i][j], lambda, model.dim)));
      const double bound = coeff * worst;
      if (bound > epsilon) continue;
      bool conditions = true;
      for (std::size_t i = 0; i < n && conditions; ++i)
        for (std::size_t j = 0; j < dim && conditions; ++j)
          conditions = same_sign_tail(m, model.points[i][j], lambda,
                                      model.dim, s);
      if (!conditions) continue;
      best_m = m;
      best_s = s;
      best_bound = bound;
      break;
    }
  }
  if (best_m == 0)
    throw NumericalError(
        "kde plan: no feasible Euler-MacLaurin truncation in search range");

  EulerMaclaurinPlan plan;
  plan.m = best_m;
  plan.s = best_s;
  plan.bernoulli.assign(bern.begin(),
                        bern.begin() + 2 * best_s + 3);
  plan.epsilon = epsilon;
  plan.remainder_bound = best_bound;

  // log C = sum_{j=1}^{dim-1} log(dim - j + 1/lambda)
  double log_c = 0.0;
  for (int j = 1; j < model.dim; ++j)
    log_c += std::log(model.dim - j + 1.0 / lambda);

  plan.point_log_scale.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double total = log_c;
    for (std::size_t j = 0; j < dim; ++j) {
      const double z = model.points[i][j];
      double term = -(kEulerMascheroni / lambda) * (1.0 / model.dim - z);
      for (int k = 1; k < plan.m; ++k)
        term += detail::g_value(k, z, lambda, model.dim);
      term += detail::g_integral_to_inf(plan.m, z, lambda, model.dim);
      term += 0.5 * detail::g_value(plan.m, z, lambda, model.dim);
      double fact2r = 1.0; // running (2r)!
      for (int r = 1; r <= plan.s; ++r) {
        fact2r *= (2 * r - 1) * (2 * r);
        term -= plan.bernoulli[static_cast<std::size_t>(2 * r)] / fact2r *
                detail::g_derivative(2 * r - 1, plan.m, z, lambda, model.dim);
      }
      total += term;
    }
    plan.point_log_scale[i] = total;
  }
  return plan;
}

double eval_euler_maclaurin(const KdeModel& model,
                            const EulerMaclaurinPlan& plan,
                            const Composition& x) {
  if (plan.point_log_scale.size() != model.count())
    throw std::invalid_argument("kde eval: plan/model mismatch");
  return eval_with_scales(model, plan.point_log_scale, x);
}

nlohmann::json to_json(const KdeModel& model) {
  nlohmann::json j;
  j["format"] = "landdiv.kde";
  j["version"] = 1;
  j["dim"] = model.dim;
  j["lambda"] = model.lambda;
  j["eta"] = model.eta;
  nlohmann::json pts = nlohmann::json::array();
  for (const Composition& z : model.points) pts.push_back(z.parts());
  j["points"] = std::move(pts);
  return j;
}

KdeModel from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "landdiv.kde" || j.value("version", 0) != 1)
    throw InputError("kde: unrecognized model document");
  std::vector<Composition> points;
  for (const auto& row : j.at("points"))
    points.emplace_back(row.get<std::vector<double>>());
  return build(std::move(points), j.at("lambda").get<double>(),
               j.at("eta").get<double>());
}

void save(const KdeModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("kde: cannot open " + path + " for writing");
  out << to_json(model).dump(2) << '\n';
}

KdeModel load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("kde: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

} // namespace landdiv::kde
