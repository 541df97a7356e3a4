#pragma once

#include <cstdint>
#include <random>

namespace landdiv {

// Random number generator with self-contained variate transforms.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distribution adaptors are not; mapping bits to variates here keeps
// streams identical for a given seed across compilers.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_pos() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unit-exponential variate.
  double exponential();

  /// Standard normal variate (Box-Muller, one value per call).
  double normal();

  /// Gamma variate with the given shape and unit scale.
  double gamma(double shape);

  /// Unbiased index in [0, n).
  std::size_t uniform_index(std::size_t n);

private:
  std::mt19937_64 gen_;
};

/// Independent stream seed derived from a base seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

} // namespace landdiv
