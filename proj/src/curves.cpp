#include "landdiv/curves.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "landdiv/errors.hpp"
#include "landdiv/format.hpp"

namespace landdiv {

CurveEstimate estimate_curve(std::span<const std::pair<double, double>> pairs,
                             const WeightVector& w, int bins) {
  if (bins < 2) throw std::invalid_argument("estimate_curve: bins >= 2");
  const double lo = w.min(), hi = w.max();
  const double width = (hi - lo) / bins;
  CurveEstimate curve;
  curve.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) curve.edges[static_cast<std::size_t>(i)] = lo + width * i;
  curve.edges.back() = hi;
  curve.means.assign(static_cast<std::size_t>(bins),
                     std::numeric_limits<double>::quiet_NaN());
  curve.counts.assign(static_cast<std::size_t>(bins), 0);
  curve.sums.assign(static_cast<std::size_t>(bins), 0.0);

  for (const auto& [a, value] : pairs) {
    double aa = a;
    // tolerate endpoint round-off from float accumulation
    if (aa < lo && aa >= lo - 1e-9) aa = lo;
    if (aa > hi && aa <= hi + 1e-9) aa = hi;
    if (aa < lo || aa > hi)
      throw std::invalid_argument("estimate_curve: A value out of range");
    std::size_t bin = static_cast<std::size_t>((aa - lo) / width);
    if (bin >= curve.bins()) bin = curve.bins() - 1; // right-inclusive last bin
    curve.sums[bin] += value;
    curve.counts[bin] += 1;
  }
  for (std::size_t i = 0; i < curve.bins(); ++i)
    if (curve.counts[i] > 0)
      curve.means[i] = curve.sums[i] / static_cast<double>(curve.counts[i]);
  return curve;
}

CurveEstimate coarsen_by_two(const CurveEstimate& fine) {
  if (fine.bins() % 2 != 0)
    throw std::invalid_argument("coarsen_by_two: odd bin count");
  CurveEstimate coarse;
  const std::size_t bins = fine.bins() / 2;
  coarse.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) coarse.edges[i] = fine.edges[2 * i];
  coarse.means.assign(bins, std::numeric_limits<double>::quiet_NaN());
  coarse.counts.assign(bins, 0);
  coarse.sums.assign(bins, 0.0);
  for (std::size_t i = 0; i < bins; ++i) {
    coarse.sums[i] = fine.sums[2 * i] + fine.sums[2 * i + 1];
    coarse.counts[i] = fine.counts[2 * i] + fine.counts[2 * i + 1];
    if (coarse.counts[i] > 0)
      coarse.means[i] = coarse.sums[i] / static_cast<double>(coarse.counts[i]);
  }
  return coarse;
}

IseResult ise_detailed(const CurveEstimate& c1, const CurveEstimate& c2) {
  if (c1.edges != c2.edges)
    throw std::invalid_argument("ise: curves have mismatched bin edges");
  IseResult result;
  for (std::size_t i = 0; i < c1.bins(); ++i) {
    const double width = c1.edges[i + 1] - c1.edges[i];
    if (c1.bin_empty(i) || c2.bin_empty(i)) {
      result.skipped_width += width;
      continue;
    }
    const double d = c1.means[i] - c2.means[i];
    result.value += d * d * width;
  }
  return result;
}

double ise(const CurveEstimate& c1, const CurveEstimate& c2) {
  return ise_detailed(c1, c2).value;
}

void write_curve_csv(const CurveEstimate& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("curve csv: cannot open " + path);
  out << "bin_left,bin_right,count,mean\n";
  for (std::size_t i = 0; i < curve.bins(); ++i) {
    out << format_double(curve.edges[i]) << ','
        << format_double(curve.edges[i + 1]) << ',' << curve.counts[i] << ',';
    if (!curve.bin_empty(i)) out << format_double(curve.means[i]);
    out << '\n';
  }
}

} // namespace landdiv
