#pragma once

#include "segpoint/series.hpp"

namespace segpoint {
namespace boxcox {

// Power transform (x^eta - 1)/eta for eta != 0, ln x for eta = 0; continuous
// in eta at 0. Exponents with |eta| < 1e-10 take the log branch.
double transform(double x, double eta);

std::vector<double> transform_series(const Series& series, double eta);

struct EtaGrid {
  double lo = -2.0;
  double hi = 2.0;
  double step = 0.01;
};

// Grid minimizer of the profile-normalized spread: transform with eta, divide
// by GM(x)^(eta-1) (GM = geometric mean of the raw values), take the sample
// standard deviation. Ties break toward the eta closest to 0, then the
// smaller eta.
double estimate_eta(const Series& series, const EtaGrid& grid = {});

}  // namespace boxcox
}  // namespace segpoint
