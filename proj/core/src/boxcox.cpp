#include "segpoint/boxcox.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace segpoint {
namespace boxcox {

namespace {
constexpr double kLogBranchEps = 1e-10;
}

double transform(double x, double eta) {
  if (!(x > 0.0)) throw std::domain_error("boxcox transform requires x > 0");
  if (std::abs(eta) < kLogBranchEps) return std::log(x);
  return (std::pow(x, eta) - 1.0) / eta;
}

std::vector<double> transform_series(const Series& series, double eta) {
  series.require_positive("boxcox transform");
  std::vector<double> out;
  out.reserve(series.values().size());
  for (double v : series.values()) out.push_back(transform(v, eta));
  return out;
}

double estimate_eta(const Series& series, const EtaGrid& grid) {
  series.require_positive("estimate_eta");
  if (!(grid.lo < grid.hi) || !(grid.step > 0.0)) {
    throw std::invalid_argument("estimate_eta: grid must satisfy lo < hi, step > 0");
  }

  const auto& xs = series.values();
  const std::size_t n = xs.size();
  std::vector<double> lnx(n);
  double ln_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lnx[i] = std::log(xs[i]);
    ln_sum += lnx[i];
  }
  const double ln_gm = ln_sum / static_cast<double>(n);

  const int points = static_cast<int>(std::llround((grid.hi - grid.lo) / grid.step));
  double best_obj = 0.0, best_eta = 0.0;
  bool have_best = false;

  for (int i = 0; i <= points; ++i) {
    double eta = grid.lo + i * grid.step;
    if (std::abs(eta) < kLogBranchEps) eta = 0.0;  // snap the zero grid point
    // z_t = x_t(eta) / GM^(eta-1); the scale factor keeps spreads comparable
    // across eta.
    const double scale = std::exp(ln_gm * (eta - 1.0));
    double sum = 0.0, sumsq = 0.0;
    if (std::abs(eta) < kLogBranchEps) {
      for (std::size_t t = 0; t < n; ++t) {
        const double z = lnx[t] / scale;
        sum += z;
        sumsq += z * z;
      }
    } else {
      for (std::size_t t = 0; t < n; ++t) {
        const double z = (std::exp(eta * lnx[t]) - 1.0) / eta / scale;
        sum += z;
        sumsq += z * z;
      }
    }
    const double mean = sum / static_cast<double>(n);
    double var = 0.0;
    if (n > 1) {
      var = (sumsq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
      if (var < 0.0) var = 0.0;
    }
    const double obj = std::sqrt(var);

    const bool better =
        !have_best || obj < best_obj ||
        (obj == best_obj && (std::abs(eta) < std::abs(best_eta) ||
                             (std::abs(eta) == std::abs(best_eta) && eta < best_eta)));
    if (better) {
      best_obj = obj;
      best_eta = eta;
      have_best = true;
    }
  }
  return best_eta;
}

}  // namespace boxcox
}  // namespace segpoint
