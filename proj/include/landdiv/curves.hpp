#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "landdiv/composition.hpp"

namespace landdiv {

// Stepwise approximation of a |-> E[Index | A = a]: equal-width bins over
// [w_1, w_n] with the per-bin mean of the index. Empty bins keep count 0
// and no fabricated mean.
struct CurveEstimate {
  std::vector<double> edges;       // bins + 1 values, first w_1, last w_n
  std::vector<double> means;       // per bin; meaningful only when count > 0
  std::vector<std::size_t> counts; // per bin
  std::vector<double> sums;        // per bin; kept for exact re-aggregation

  std::size_t bins() const { return counts.size(); }
  bool bin_empty(std::size_t i) const { return counts[i] == 0; }
};

/// Bin (A, index) pairs into `bins` equal-width bins over [w_1, w_n];
/// the last bin is right-inclusive. Throws when some A is out of range.
CurveEstimate estimate_curve(std::span<const std::pair<double, double>> pairs,
                             const WeightVector& w, int bins);

/// Merge an estimate with 2k bins down to k bins, count-weighted.
CurveEstimate coarsen_by_two(const CurveEstimate& fine);

struct IseResult {
  double value = 0.0;        // sum over mutually nonempty bins
  double skipped_width = 0.0; // total width of bins empty in either curve
};

/// Integrated square error between two curves on identical edges,
/// restricted to bins nonempty in both.
double ise(const CurveEstimate& c1, const CurveEstimate& c2);
IseResult ise_detailed(const CurveEstimate& c1, const CurveEstimate& c2);

/// CSV with columns bin_left,bin_right,count,mean (mean blank when empty).
void write_curve_csv(const CurveEstimate& curve, const std::string& path);

} // namespace landdiv
