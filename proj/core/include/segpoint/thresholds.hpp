#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace segpoint {

enum class Provenance { calibrated, paper_table, user_supplied };

struct ThresholdLevel {
  int level = 0;
  double alpha = 0.0;
  double threshold = 0.0;
  long samples = 0;  // null statistics behind this level's percentile (0 if n/a)
};

// Per-level decision thresholds H_1..H_g with their alpha levels. The overall
// false-detection probability is bounded by the alpha sum (Bonferroni).
struct ThresholdProfile {
  int g = 0;
  std::vector<ThresholdLevel> levels;
  double overall_alpha_bound = 0.0;
  Provenance provenance = Provenance::user_supplied;
  std::optional<std::uint64_t> seed;
  std::optional<long> reps;
  std::optional<long> sets;

  double threshold_at(int level) const;
  double alpha_at(int level) const;
  void validate() const;

  // The seven threshold/alpha pairs printed in the source study (m=200, seven
  // levels). Tied to that study's statistic scale; kept as a regression
  // anchor, not a recommended default.
  static ThresholdProfile paper_table();

  static ThresholdProfile user_supplied_profile(const std::vector<double>& alphas,
                                                const std::vector<double>& thresholds);
};

// Nearest-rank upper percentile: the ceil(n*(1-alpha))-th order statistic of
// the sample (1-based).
double nearest_rank_percentile(std::vector<double> sample, double alpha);

}  // namespace segpoint
