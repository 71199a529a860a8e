#pragma once

#include <cstdint>
#include <random>

namespace zinb {

/// Random stream owned by exactly one chain. All draws needed by the sampler
/// are implemented on top of a single mt19937_64 so that a fixed seed gives a
/// fixed draw sequence independent of the platform's distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no cached spare).
  double normal();

  double normal(double mu, double sd) { return mu + sd * normal(); }

  /// Exponential with rate 1.
  double exponential();

  /// Gamma with given shape and scale (Marsaglia-Tsang).
  double gamma(double shape, double scale = 1.0);

  /// Inverse gamma: 1/G where G ~ Gamma(shape, rate).
  double inv_gamma(double shape, double rate);

  /// Inverse Gaussian with mean mu and shape lambda.
  double inv_gauss(double mu, double lambda);

  bool bernoulli(double p) { return uniform() < p; }

  int poisson(double mean);

  /// Derive an independent substream; the mapping is a fixed function of the
  /// parent stream state, so seed determinism is preserved.
  Rng spawn() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zinb
