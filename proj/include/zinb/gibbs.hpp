#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zinb/chain_state.hpp"
#include "zinb/dataset.hpp"
#include "zinb/nngp.hpp"
#include "zinb/priors.hpp"
#include "zinb/rng.hpp"
#include "zinb/samples.hpp"

namespace zinb {

struct ChainConfig {
  int n_iter = 10000;
  int burn_in = 5000;
  int thin = 1;
  std::uint64_t seed = 1;
  // NNGP is used for a process when its point count exceeds the threshold;
  // below it the dense correlation inverse is used.
  int nngp_threshold_spatial = 0;
  int nngp_threshold_temporal = 200;
  bool adapt_proposals = true;   // burn-in only
  bool random_ordering = false;  // NNGP ordering: coord-sum vs shuffled
  bool fix_length_scales = false;
  bool store_eta = false;
  bool store_latents = false;

  void validate() const {
    if (n_iter <= 0) throw ConfigError("n_iter must be positive");
    if (burn_in < 0 || burn_in >= n_iter) {
      throw ConfigError("burn_in must satisfy 0 <= burn_in < n_iter");
    }
    if (thin < 1) throw ConfigError("thin must be >= 1");
  }
};

// ---------------------------------------------------------------------------
// Shared update primitives. Each full conditional is exposed on its own so
// tests can freeze the rest of the chain.
// ---------------------------------------------------------------------------

/// Stable log(1 + exp(x)).
double softplus(double x);
double expit(double x);

/// P(W = 1 | y = 0, rest) = pi nu^r / ((1 - pi) + pi nu^r) with
/// pi = expit(eta1), nu = 1 - expit(eta2), evaluated in log space as
/// expit(eta1 - r softplus(eta2)).
double at_risk_probability(double eta1, double eta2, double r);

/// Conjugate draw of an indexed iid-normal noise vector. The incidence Gram
/// matrix is diagonal, so the posterior factorizes per entry:
/// prec_s = 1/sigma_eps2 + sum_{j owned by s} omega_j,
/// mean_s = (sum omega_j resid_j) / prec_s.
/// owner/omega/residual are aligned (one entry per contributing row).
Eigen::VectorXd update_indexed_noise(const std::vector<int>& owner,
                                     const Eigen::VectorXd& omega,
                                     const Eigen::VectorXd& residual,
                                     double sigma_eps2, int len, Rng& rng,
                                     Eigen::VectorXd* out_mean = nullptr,
                                     Eigen::VectorXd* out_var = nullptr);

struct IgParams {
  double shape;
  double rate;
};

/// sigma^2 | w ~ IG(a + n/2, b + w' rho~^{-1} w / 2) for w ~ N(0, sigma^2 rho~).
IgParams gp_variance_posterior(const Eigen::VectorXd& effect,
                               const GpFactor& corr, double a_sigma,
                               double b_sigma);
double update_gp_variance(const Eigen::VectorXd& effect, const GpFactor& corr,
                          double a_sigma, double b_sigma, Rng& rng);

IgParams noise_variance_posterior(const Eigen::VectorXd& noise, double a_eps,
                                  double b_eps);
double update_noise_variance(const Eigen::VectorXd& noise, double a_eps,
                             double b_eps, Rng& rng);

struct LengthScaleResult {
  double l;
  bool accepted;
  double log_ratio;  // log acceptance ratio before capping at 0
  GpFactor factor;   // correlation factor at the returned l
};

/// One random-walk MH move on a length-scale with Gamma(a_l, b_l) prior.
/// The correlation factor is rebuilt at the proposal (NNGP when sets is
/// non-null, dense otherwise); a factor construction failure rejects the
/// proposal and records a warning.
LengthScaleResult update_length_scale(
    const Eigen::VectorXd& effect, double sigma, double l_current,
    GpFactor factor_current, double a_l, double b_l, double proposal_sd,
    const NeighborSets* sets, const PointList& pts, Rng& rng,
    std::vector<std::string>* warnings = nullptr);

/// NB log likelihood over the given rows:
/// sum lgamma(y+r) - lgamma(r) - lgamma(y+1) + r log(1-psi) + y log(psi).
double nb_log_likelihood(const Eigen::VectorXi& y,
                         const std::vector<int>& rows,
                         const Eigen::VectorXd& eta2, double r);

struct DispersionResult {
  double r;
  bool accepted;
};

/// MH move on r: zero-truncated normal proposal centered at the current
/// value (with the proposal-density correction Phi(r/sd)/Phi(r*/sd)) and a
/// uniform prior on (0, r_max].
DispersionResult update_dispersion(const Eigen::VectorXi& y,
                                   const std::vector<int>& rows,
                                   const Eigen::VectorXd& eta2,
                                   double r_current, double proposal_sd,
                                   double r_max, Rng& rng);

/// Draws x ~ N(Q^{-1} rhs, Q^{-1}) from a sparse symmetric positive-definite
/// precision Q; retries once with a small diagonal ridge before failing.
Eigen::VectorXd sample_gaussian_from_precision(
    const Eigen::SparseMatrix<double>& precision, const Eigen::VectorXd& rhs,
    Rng& rng, Eigen::VectorXd* out_mean = nullptr);

// ---------------------------------------------------------------------------
// Chain driver: the full posterior sweep in appendix order (at-risk
// indicators, binary block, binary noises, binary hyperparameters, count
// block, count noises, count hyperparameters), followed by the dispersion
// move.
// ---------------------------------------------------------------------------

class GibbsSampler {
 public:
  GibbsSampler(PanelDataset data, PriorSpec priors, ChainConfig config);

  /// Runs the configured number of iterations and returns the retained
  /// draws. Acceptance rates are computed over post-burn-in iterations.
  PosteriorSamples run(Rng& rng);

  /// One full sweep; appends to step_trace().
  void iterate(Rng& rng);

  // Individual updates, in appendix order.
  void update_at_risk(Rng& rng);                  // step 1
  void update_binary_block(Rng& rng);             // step 2
  void update_binary_spatial_noise(Rng& rng);     // step 3
  void update_binary_temporal_noise(Rng& rng);    // step 4
  void update_spatial_hyper_binary(Rng& rng);     // step 5
  void update_temporal_hyper_binary(Rng& rng);    // step 6
  void update_binary_spatial_noise_var(Rng& rng);   // step 7
  void update_binary_temporal_noise_var(Rng& rng);  // step 8
  void update_count_block(Rng& rng);              // step 9
  void update_count_spatial_noise(Rng& rng);      // step 10
  void update_count_temporal_noise(Rng& rng);     // step 11
  void update_spatial_hyper_count(Rng& rng);      // step 12
  void update_temporal_hyper_count(Rng& rng);     // step 13
  void update_count_spatial_noise_var(Rng& rng);    // step 14
  void update_count_temporal_noise_var(Rng& rng);   // step 15
  void update_dispersion_step(Rng& rng);          // after step 15

  ChainState& state() { return state_; }
  const ChainState& state() const { return state_; }
  const PanelDataset& data() const { return data_; }
  PanelDataset& mutable_data() { return data_; }
  const DesignMaps& maps() const { return maps_; }
  const PriorSpec& priors() const { return priors_; }

  const std::vector<std::string>& step_trace() const { return step_trace_; }
  void clear_step_trace() { step_trace_.clear(); }
  std::map<std::string, double> acceptance_rates() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Assembled normal equations for the joint coefficient+effect draws,
  /// given augmentation weights and working responses; exposed for oracle
  /// tests. For the count system the inputs are aligned to maps().at_risk.
  struct BlockSystem {
    Eigen::SparseMatrix<double> precision;
    Eigen::VectorXd rhs;
  };
  BlockSystem binary_system(const Eigen::VectorXd& omega,
                            const Eigen::VectorXd& z) const;
  BlockSystem count_system(const Eigen::VectorXd& omega,
                           const Eigen::VectorXd& z) const;

 private:
  struct MhTarget {
    double proposal_sd = 0.1;
    long accepted = 0;
    long attempts = 0;
    long window_accepted = 0;
    long window_attempts = 0;
  };

  void rebuild_factor(int which);  // 0:a 1:b 2:c 3:d
  void adapt(MhTarget& target);
  std::pair<Eigen::VectorXd, Eigen::VectorXd> etas() const {
    return linear_predictors(state_, data_);
  }

  PanelDataset data_;
  PriorSpec priors_;
  ChainConfig config_;
  DesignMaps maps_;
  ChainState state_;

  bool spatial_nngp_ = true;
  bool temporal_nngp_ = false;
  NeighborSets spatial_sets_;
  NeighborSets temporal_sets_;
  PointList temporal_pts_;
  GpFactor factor_a_, factor_b_, factor_c_, factor_d_;

  MhTarget mh_l11_, mh_l12_, mh_l21_, mh_l22_, mh_r_;
  bool adapting_ = false;
  std::vector<std::string> step_trace_;
  std::vector<std::string> warnings_;
};

}  // namespace zinb
