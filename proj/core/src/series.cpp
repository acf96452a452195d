#include "segpoint/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace segpoint {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("series must have at least one value");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("series values must be finite");
  }
}

bool Series::all_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v > 0.0; });
}

void Series::require_positive(const std::string& op) const {
  if (!all_positive()) {
    throw std::domain_error(op + " requires strictly positive observations");
  }
}

SegmentStats segment_stats(const Series& series, int from, int to) {
  const int m = series.size();
  if (from < 1 || to > m || from > to) {
    throw std::out_of_range("segment_stats: bad range [" + std::to_string(from) +
                            ", " + std::to_string(to) + "] for m=" + std::to_string(m));
  }
  const int n = to - from + 1;
  double sum = 0.0;
  for (int t = from; t <= to; ++t) sum += series.at(t);
  const double mean = sum / n;
  double ss = 0.0;
  for (int t = from; t <= to; ++t) {
    const double d = series.at(t) - mean;
    ss += d * d;
  }
  const double sd = (n > 1) ? std::sqrt(ss / (n - 1)) : 0.0;
  return SegmentStats{n, mean, sd};
}

SegmentStats merge_stats(const SegmentStats& a, const SegmentStats& b) {
  const int n = a.count + b.count;
  const double delta = b.mean - a.mean;
  const double mean = a.mean + delta * b.count / n;
  const double m2 = a.stddev * a.stddev * (a.count - 1) +
                    b.stddev * b.stddev * (b.count - 1) +
                    delta * delta * static_cast<double>(a.count) * b.count / n;
  const double sd = (n > 1) ? std::sqrt(m2 / (n - 1)) : 0.0;
  return SegmentStats{n, mean, sd};
}

std::vector<SegmentRange> segmentation_from_changepoints(
    int m, const std::vector<int>& cps) {
  if (m < 1) throw std::invalid_argument("segmentation: m must be >= 1");
  int prev = 0;
  for (int cp : cps) {
    if (cp <= prev || cp > m - 1) {
      throw std::invalid_argument(
          "segmentation: change points must be strictly increasing and in [1, m-1]");
    }
    prev = cp;
  }
  std::vector<SegmentRange> out;
  out.reserve(cps.size() + 1);
  int start = 1;
  for (int cp : cps) {
    out.push_back({start, cp});
    start = cp + 1;
  }
  out.push_back({start, m});
  return out;
}

}  // namespace segpoint
