#include "segpoint/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace segpoint {

double ThresholdProfile::threshold_at(int level) const {
  for (const auto& l : levels) {
    if (l.level == level) return l.threshold;
  }
  throw std::invalid_argument("threshold profile has no level " + std::to_string(level));
}

double ThresholdProfile::alpha_at(int level) const {
  for (const auto& l : levels) {
    if (l.level == level) return l.alpha;
  }
  throw std::invalid_argument("threshold profile has no level " + std::to_string(level));
}

void ThresholdProfile::validate() const {
  if (g < 1) throw std::invalid_argument("threshold profile: g must be >= 1");
  if (static_cast<int>(levels.size()) != g) {
    throw std::invalid_argument("threshold profile: expected g levels");
  }
  double alpha_sum = 0.0;
  for (int i = 0; i < g; ++i) {
    const auto& l = levels[static_cast<std::size_t>(i)];
    if (l.level != i + 1) throw std::invalid_argument("threshold profile: levels must be 1..g");
    if (!(l.alpha > 0.0 && l.alpha < 1.0)) {
      throw std::invalid_argument("threshold profile: alphas must lie in (0, 1)");
    }
    if (!(l.threshold > 0.0) || !std::isfinite(l.threshold)) {
      throw std::invalid_argument("threshold profile: thresholds must be positive and finite");
    }
    alpha_sum += l.alpha;
  }
  if (std::abs(alpha_sum - overall_alpha_bound) > 1e-9) {
    throw std::invalid_argument(
        "threshold profile: overall_alpha_bound must equal the alpha sum");
  }
}

ThresholdProfile ThresholdProfile::paper_table() {
  const double hs[] = {0.7686, 0.9435, 0.7571, 0.8119, 0.7343, 0.7369, 0.6911};
  const double as[] = {0.03, 0.02, 0.02, 0.01, 0.01, 0.01, 0.01};
  ThresholdProfile p;
  p.g = 7;
  p.provenance = Provenance::paper_table;
  double sum = 0.0;
  for (int i = 0; i < 7; ++i) {
    p.levels.push_back({i + 1, as[i], hs[i], 0});
    sum += as[i];
  }
  p.overall_alpha_bound = sum;
  p.validate();
  return p;
}

ThresholdProfile ThresholdProfile::user_supplied_profile(
    const std::vector<double>& alphas, const std::vector<double>& thresholds) {
  if (alphas.size() != thresholds.size() || alphas.empty()) {
    throw std::invalid_argument("user profile: need matching non-empty alpha/threshold lists");
  }
  ThresholdProfile p;
  p.g = static_cast<int>(alphas.size());
  p.provenance = Provenance::user_supplied;
  double sum = 0.0;
  for (int i = 0; i < p.g; ++i) {
    p.levels.push_back({i + 1, alphas[static_cast<std::size_t>(i)],
                        thresholds[static_cast<std::size_t>(i)], 0});
    sum += alphas[static_cast<std::size_t>(i)];
  }
  p.overall_alpha_bound = sum;
  p.validate();
  return p;
}

double nearest_rank_percentile(std::vector<double> sample, double alpha) {
  if (sample.empty()) throw std::invalid_argument("percentile of empty sample");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("percentile: alpha must lie in (0, 1)");
  }
  std::sort(sample.begin(), sample.end());
  const auto n = sample.size();
  auto rank = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * (1.0 - alpha)));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  return sample[rank - 1];
}

}  // namespace segpoint
