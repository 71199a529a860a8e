#pragma once

#include <Eigen/Dense>

#include "zinb/errors.hpp"

namespace zinb {

/// Independent normal prior over one coefficient block (diagonal covariance).
struct CoefPrior {
  Eigen::VectorXd mean;
  Eigen::VectorXd var;

  static CoefPrior flat(int dim, double variance = 100.0) {
    return {Eigen::VectorXd::Zero(dim),
            Eigen::VectorXd::Constant(dim, variance)};
  }
};

/// Hyperprior constants and MH proposal scales. Subscript 1 refers to the
/// spatial processes of both components, subscript 2 to the temporal ones,
/// matching the hierarchical prior block. The dispersion prior is uniform on
/// (0, r_max].
struct PriorSpec {
  CoefPrior coef_binary;  // over alpha
  CoefPrior coef_count;   // over beta

  double a_sigma1 = 0.01, b_sigma1 = 0.01;  // IG on spatial GP variances
  double a_sigma2 = 0.01, b_sigma2 = 0.01;  // IG on temporal GP variances
  double a_l1 = 2.0, b_l1 = 1.0;            // Gamma on spatial length-scales
  double a_l2 = 2.0, b_l2 = 1.0;            // Gamma on temporal length-scales
  double a_eps = 0.01, b_eps = 0.01;        // IG on noise variances

  double r_max = 100.0;
  double r_proposal_sd = 0.2;
  double l_proposal_sd = 0.3;
  int m = 13;

  static PriorSpec defaults(int n_covariates) {
    PriorSpec p;
    p.coef_binary = CoefPrior::flat(n_covariates + 1);
    p.coef_count = CoefPrior::flat(n_covariates + 1);
    return p;
  }

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0)) {
        throw ConfigError(std::string("prior constant ") + name +
                          " must be > 0");
      }
    };
    positive(a_sigma1, "a_sigma1");
    positive(b_sigma1, "b_sigma1");
    positive(a_sigma2, "a_sigma2");
    positive(b_sigma2, "b_sigma2");
    positive(a_l1, "a_l1");
    positive(b_l1, "b_l1");
    positive(a_l2, "a_l2");
    positive(b_l2, "b_l2");
    positive(a_eps, "a_eps");
    positive(b_eps, "b_eps");
    positive(r_max, "r_max");
    positive(r_proposal_sd, "r_proposal_sd");
    positive(l_proposal_sd, "l_proposal_sd");
    if (m < 1) throw ConfigError("neighbor count m must be >= 1");
    if ((coef_binary.var.array() <= 0.0).any() ||
        (coef_count.var.array() <= 0.0).any()) {
      throw ConfigError("coefficient prior variances must be > 0");
    }
  }
};

}  // namespace zinb
