#pragma once

#include <Eigen/Dense>

#include "zinb/dataset.hpp"
#include "zinb/priors.hpp"
#include "zinb/rng.hpp"

namespace zinb {

/// All current parameter values of one chain. Owned exclusively by the chain
/// that runs it; never shared across threads.
struct ChainState {
  Eigen::VectorXd alpha;  // binary-component coefficients (P+1)
  Eigen::VectorXd beta;   // count-component coefficients (P+1)

  Eigen::VectorXd a;  // spatial effect, binary (S)
  Eigen::VectorXd b;  // temporal effect, binary (T)
  Eigen::VectorXd c;  // spatial effect, count (S)
  Eigen::VectorXd d;  // temporal effect, count (T)

  Eigen::VectorXd eps11;  // spatial noise, binary (S)
  Eigen::VectorXd eps12;  // temporal noise, binary (T)
  Eigen::VectorXd eps21;  // spatial noise, count (S)
  Eigen::VectorXd eps22;  // temporal noise, count (T)

  // GP amplitudes and length-scales (SD scale for sigma).
  double sigma11 = 1.0, sigma12 = 1.0, sigma21 = 1.0, sigma22 = 1.0;
  double l11 = 1.0, l12 = 1.0, l21 = 1.0, l22 = 1.0;

  // Noise SDs.
  double sigma_eps11 = 1.0, sigma_eps12 = 1.0;
  double sigma_eps21 = 1.0, sigma_eps22 = 1.0;

  double r = 1.0;  // NB dispersion

  Eigen::VectorXi w;       // at-risk indicators (N)
  Eigen::VectorXd omega1;  // PG draws, binary (N)
  Eigen::VectorXd omega2;  // PG draws, count; meaningful only where w = 1 (N)

  /// Neutral start: coefficients, effects and noises at zero, variances at 1,
  /// length-scales at the prior mean, r at 1, W = 1{y>0} with Bernoulli(1/2)
  /// fill-in on zeros.
  static ChainState initial(const PanelDataset& data, const PriorSpec& priors,
                            Rng& rng);

  void check_dims(const PanelDataset& data) const;
};

}  // namespace zinb
