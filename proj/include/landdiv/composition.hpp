#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "landdiv/rng.hpp"

namespace landdiv {

/// A diversity or appropriation index value.
using IndexValue = double;

inline constexpr double kDefaultZeroTol = 1e-9;

// A point on the standard simplex: non-negative proportions summing to 1.
//
// Construction accepts part sums within 1e-9 of 1 as-is (so round-trips
// through text formats are idempotent), rescales sums within 1e-6, and
// rejects anything further off.
class Composition {
public:
  explicit Composition(std::vector<double> parts);

  std::size_t size() const { return parts_.size(); }
  double operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<double>& parts() const { return parts_; }

  bool operator==(const Composition&) const = default;

private:
  std::vector<double> parts_;
};

/// Per-cover appropriation percentages, strictly increasing.
class WeightVector {
public:
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  double min() const { return weights_.front(); }
  double max() const { return weights_.back(); }

  bool operator==(const WeightVector&) const = default;

private:
  std::vector<double> weights_;
};

/// Which covers are present in a cell (at least one).
struct SubsimplexMask {
  std::vector<bool> present;

  std::size_t size() const { return present.size(); }
  std::size_t active_count() const;
  /// Indices of present covers, ascending.
  std::vector<std::size_t> active_indices() const;
  std::string to_string() const; // e.g. "1101"
  static SubsimplexMask from_string(const std::string& bits);

  bool operator==(const SubsimplexMask&) const = default;
  bool operator<(const SubsimplexMask& o) const { return present < o.present; }
};

/// Shannon index -sum p_i log_base p_i with 0 log 0 = 0.
/// `base` is the total number of cover categories in the study.
IndexValue shannon_index(const Composition& c, int base);

/// Weighted appropriation sum w_i p_i.
IndexValue appropriation(const Composition& c, const WeightVector& w);

// Urban-penalized diversity: (1 - p_u) times the Shannon index of the
// non-urban proportions renormalized to the non-urban surface, with log
// base equal to the number of non-urban categories. Zero when p_u = 1.
IndexValue l_index(const Composition& c, std::size_t urban_index);

/// Simpson index 1 - sum p_i^2.
IndexValue simpson_index(const Composition& c);

/// Berger-Parker index 1 / max p_i.
double berger_parker_index(const Composition& c);

/// `count` i.i.d. points uniform on the standard (dim-1)-simplex,
/// via normalized unit exponentials. Deterministic given seed.
std::vector<Composition> sample_uniform_simplex(std::size_t dim,
                                                std::size_t count,
                                                std::uint64_t seed);

/// Single draw variant reusing a caller-owned generator.
Composition sample_uniform_simplex_one(std::size_t dim, Rng& rng);

/// Mask of covers with proportion above zero_tol.
SubsimplexMask subsimplex_of(const Composition& c,
                             double zero_tol = kDefaultZeroTol);

/// Restrict to the mask's covers and renormalize.
Composition reduce_to_face(const Composition& c, const SubsimplexMask& mask);

/// Place a face composition back into full dimension; absent covers are
/// exactly zero.
Composition embed_from_face(const Composition& face,
                            const SubsimplexMask& mask);

} // namespace landdiv
