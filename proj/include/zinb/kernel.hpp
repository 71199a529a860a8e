#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "zinb/errors.hpp"

namespace zinb {

/// Planar point. Temporal indices are embedded as (w_t, 0).
using Point = std::array<double, 2>;
using PointList = std::vector<Point>;

inline double sq_dist(const Point& a, const Point& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

/// Squared-exponential kernel parameters: marginal SD sigma and length-scale l.
struct KernelParams {
  double sigma = 1.0;
  double l = 1.0;
};

/// Correlation exp(-|h_i - h_j|^2 / l^2); the covariance entry is sigma^2
/// times this value.
inline double sq_exp_corr(const Point& h_i, const Point& h_j, double l) {
  if (!(l > 0.0)) throw ContractError("sq_exp_corr: length-scale must be > 0");
  return std::exp(-sq_dist(h_i, h_j) / (l * l));
}

}  // namespace zinb
