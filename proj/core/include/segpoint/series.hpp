#pragma once

#include <optional>
#include <string>
#include <vector>

namespace segpoint {

// Series positions are 1-based throughout the public API (t = 1..m), matching
// all file and JSON output. A change point index tau is the position of the
// LAST observation of the earlier segment; observations tau+1..next boundary
// form the next segment.

// Ordered observations x_1..x_m. Values must be finite; m >= 1.
class Series {
 public:
  explicit Series(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double at(int t) const { return values_[static_cast<std::size_t>(t - 1)]; }
  const std::vector<double>& values() const { return values_; }

  bool all_positive() const;
  // Throws std::domain_error unless every value is strictly positive.
  void require_positive(const std::string& op) const;

 private:
  std::vector<double> values_;
};

// Count, sample mean and sample standard deviation (divisor m-1; 0 for a
// singleton) of a contiguous segment.
struct SegmentStats {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

// Stats of the inclusive slice [from, to], 1-based. Throws std::out_of_range
// on bad indices.
SegmentStats segment_stats(const Series& series, int from, int to);

// Pooled stats of two adjacent segments.
SegmentStats merge_stats(const SegmentStats& a, const SegmentStats& b);

// Inclusive 1-based segment range.
struct SegmentRange {
  int from = 0;
  int to = 0;
  bool operator==(const SegmentRange&) const = default;
};

// Splits [1, m] at the given change points (strictly increasing, each in
// [1, m-1]) into R+1 contiguous ranges; segment j ends at cps[j].
std::vector<SegmentRange> segmentation_from_changepoints(
    int m, const std::vector<int>& cps);

enum class Method { cluster, lrt };
enum class ClusterVariant { agglomerative, divisive };

struct LevelStat {
  int level = 0;          // trace level (cluster) or test index (lrt)
  double statistic = 0.0;
  double threshold = 0.0;
  bool exceeded = false;
  std::optional<int> location;  // boundary/split position the statistic refers to
};

struct DetectionResult {
  Method method = Method::cluster;
  std::optional<ClusterVariant> variant;
  std::optional<double> eta;          // Box-Cox exponent applied, if any
  std::vector<int> change_points;     // ascending, each in [1, m-1]
  std::vector<LevelStat> levels;
};

}  // namespace segpoint
