#include "zinb/rng.hpp"

#include <cmath>

#include "zinb/errors.hpp"

namespace zinb {

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::gamma(double shape, double scale) {
  if (shape <= 0.0 || scale <= 0.0) {
    throw ContractError("gamma: shape and scale must be positive");
  }
  if (shape < 1.0) {
    // Boost: G(a) = G(a+1) * U^(1/a)
    const double u = uniform();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v * scale;
    }
  }
}

double Rng::inv_gamma(double shape, double rate) {
  return 1.0 / gamma(shape, 1.0 / rate);
}

double Rng::inv_gauss(double mu, double lambda) {
  if (mu <= 0.0 || lambda <= 0.0) {
    throw ContractError("inv_gauss: mu and lambda must be positive");
  }
  const double z = normal();
  const double y = z * z;
  const double x = mu + 0.5 * mu * mu * y / lambda -
                   0.5 * (mu / lambda) *
                       std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
  if (uniform() <= mu / (mu + x)) return x;
  return mu * mu / x;
}

int Rng::poisson(double mean) {
  if (mean < 0.0) throw ContractError("poisson: mean must be nonnegative");
  if (mean == 0.0) return 0;
  if (mean > 60.0) {
    // Split large means so the Knuth product never underflows.
    return poisson(mean * 0.5) + poisson(mean - mean * 0.5);
  }
  const double limit = std::exp(-mean);
  int k = 0;
  double prod = uniform();
  while (prod > limit) {
    ++k;
    prod *= uniform();
  }
  return k;
}

}  // namespace zinb
