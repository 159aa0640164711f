#pragma once

#include <span>

namespace qsm::app {

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qsm::app
