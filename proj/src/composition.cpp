#include "landdiv/composition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "landdiv/errors.hpp"

namespace landdiv {

namespace {

double checked_sum(const std::vector<double>& parts) {
  if (parts.empty())
    throw std::invalid_argument("Composition: needs at least one part");
  double s = 0.0;
  for (double p : parts) {
    if (!(p >= 0.0))
      throw std::invalid_argument("Composition: parts must be >= 0");
    s += p;
  }
  return s;
}

} // namespace

Composition::Composition(std::vector<double> parts) : parts_(std::move(parts)) {
  const double s = checked_sum(parts_);
  if (std::abs(s - 1.0) <= 1e-9) return;
  if (std::abs(s - 1.0) <= 1e-6) {
    for (double& p : parts_) p /= s;
    return;
  }
  throw std::invalid_argument("Composition: parts sum to " + std::to_string(s) +
                              ", outside tolerance");
}

WeightVector::WeightVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("WeightVector: needs at least one weight");
  for (std::size_t i = 1; i < weights_.size(); ++i)
    if (!(weights_[i] > weights_[i - 1]))
      throw std::invalid_argument("WeightVector: weights must be strictly increasing");
}

std::size_t SubsimplexMask::active_count() const {
  return static_cast<std::size_t>(
      std::count(present.begin(), present.end(), true));
}

std::vector<std::size_t> SubsimplexMask::active_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < present.size(); ++i)
    if (present[i]) idx.push_back(i);
  return idx;
}

std::string SubsimplexMask::to_string() const {
  std::string s;
  s.reserve(present.size());
  for (bool b : present) s.push_back(b ? '1' : '0');
  return s;
}

SubsimplexMask SubsimplexMask::from_string(const std::string& bits) {
  SubsimplexMask m;
  m.present.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("SubsimplexMask: expected only 0/1");
    m.present.push_back(c == '1');
  }
  if (m.present.empty() || m.active_count() == 0)
    throw std::invalid_argument("SubsimplexMask: at least one cover required");
  return m;
}

IndexValue shannon_index(const Composition& c, int base) {
  if (base < 2) throw std::invalid_argument("shannon_index: base must be >= 2");
  const double ln_base = std::log(static_cast<double>(base));
  double h = 0.0;
  for (double p : c.parts())
    if (p > 0.0) h -= p * std::log(p);
  return h / ln_base;
}

IndexValue appropriation(const Composition& c, const WeightVector& w) {
  if (c.size() != w.size())
    throw std::invalid_argument("appropriation: length mismatch");
  double a = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) a += w[i] * c[i];
  return a;
}

IndexValue l_index(const Composition& c, std::size_t urban_index) {
  if (urban_index >= c.size())
    throw std::invalid_argument("l_index: urban_index out of range");
  const std::size_t non_urban = c.size() - 1;
  if (non_urban < 2) return 0.0; // single non-urban category has zero entropy
  const double p_u = c[urban_index];
  const double rest = 1.0 - p_u;
  if (rest <= 0.0) return 0.0;
  const double ln_base = std::log(static_cast<double>(non_urban));
  double h = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == urban_index) continue;
    const double p = c[i] / rest;
    if (p > 0.0) h -= p * std::log(p);
  }
  return (1.0 - p_u) * h / ln_base;
}

IndexValue simpson_index(const Composition& c) {
  double s = 0.0;
  for (double p : c.parts()) s += p * p;
  return 1.0 - s;
}

double berger_parker_index(const Composition& c) {
  const double mx = *std::max_element(c.parts().begin(), c.parts().end());
  if (mx <= 0.0)
    throw std::invalid_argument("berger_parker_index: all-zero input");
  return 1.0 / mx;
}

Composition sample_uniform_simplex_one(std::size_t dim, Rng& rng) {
  std::vector<double> parts(dim);
  double total = 0.0;
  for (double& y : parts) {
    y = rng.exponential();
    total += y;
  }
  for (double& y : parts) y /= total;
  return Composition(std::move(parts));
}

std::vector<Composition> sample_uniform_simplex(std::size_t dim,
                                                std::size_t count,
                                                std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("sample_uniform_simplex: dim >= 1");
  if (count < 1)
    throw std::invalid_argument("sample_uniform_simplex: count >= 1");
  Rng rng(seed);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sample_uniform_simplex_one(dim, rng));
  return out;
}

SubsimplexMask subsimplex_of(const Composition& c, double zero_tol) {
  SubsimplexMask m;
  m.present.reserve(c.size());
  bool any = false;
  for (double p : c.parts()) {
    const bool on = p > zero_tol;
    any = any || on;
    m.present.push_back(on);
  }
  if (!any)
    throw std::invalid_argument("subsimplex_of: all parts below zero_tol");
  return m;
}

Composition reduce_to_face(const Composition& c, const SubsimplexMask& mask) {
  if (mask.size() != c.size())
    throw std::invalid_argument("reduce_to_face: mask length mismatch");
  std::vector<double> parts;
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mask.present[i]) continue;
    parts.push_back(c[i]);
    s += c[i];
  }
  if (s <= 0.0)
    throw std::invalid_argument("reduce_to_face: mask selects zero mass");
  for (double& p : parts) p /= s;
  return Composition(std::move(parts));
}

Composition embed_from_face(const Composition& face,
                            const SubsimplexMask& mask) {
  if (face.size() != mask.active_count())
    throw std::invalid_argument("embed_from_face: size mismatch");
  std::vector<double> parts(mask.size(), 0.0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask.present[i]) parts[i] = face[j++];
  return Composition(std::move(parts));
}

} // namespace landdiv
