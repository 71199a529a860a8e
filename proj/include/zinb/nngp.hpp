#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <string>
#include <vector>

#include "zinb/kernel.hpp"

namespace zinb {

enum class OrderingRule {
  kCoordSum,  // sort by x + y, ties by original index
  kGiven,     // keep input order (natural time order)
  kRandom,    // seed-deterministic shuffle
};

/// Ordering and nearest-neighbor conditioning sets for one point process.
/// Depends only on the coordinates and m, so it is built once per chain and
/// shared across all length-scale proposals.
struct NeighborSets {
  PointList points;                         // original indexing, jittered if needed
  std::vector<int> order;                   // ordered position -> original index
  std::vector<std::vector<int>> neighbors;  // per ordered position i, positions < i
  int m = 0;
};

/// Builds the ordering and the m-nearest earlier-ordered neighbor sets.
/// Exact duplicate coordinates are jittered deterministically and a warning
/// is recorded; m must satisfy 1 <= m <= S-1 when S > 1.
NeighborSets build_neighbor_sets(const PointList& coords, int m,
                                 OrderingRule rule,
                                 std::uint64_t shuffle_seed = 0,
                                 std::vector<std::string>* warnings = nullptr);

/// Dense correlation matrix exp(-|h_i-h_j|^2/l^2).
Eigen::MatrixXd corr_matrix(const PointList& pts, double l);

/// Factorized unit-variance correlation model rho for one GP, either as the
/// sparse nearest-neighbor factor rho~^{-1} = (I-A)' D^{-1} (I-A) or as a
/// dense Cholesky inverse for small point sets. Rebuilt whenever the
/// length-scale changes; immutable afterwards.
class GpFactor {
 public:
  static GpFactor nngp(const NeighborSets& sets, double l);
  static GpFactor dense(const PointList& pts, double l);

  int size() const { return n_; }
  bool is_nngp() const { return nngp_; }

  /// w' rho~^{-1} w = sum_i (w_i - a_i' w_{N(i)})^2 / d_i, w in original
  /// indexing.
  double quad_form(const Eigen::VectorXd& w) const;

  /// log det rho~ = sum_i log d_i.
  double log_det() const;

  /// log N(w | 0, sigma^2 rho~).
  double log_density(const Eigen::VectorXd& w, double sigma) const;

  /// Appends scale * rho~^{-1} (original indexing, shifted by offset) to a
  /// sparse triplet list.
  void add_precision(std::vector<Eigen::Triplet<double>>& out, int offset,
                     double scale) const;

  /// Conditional variances d_i in ordered positions (NNGP mode only).
  const Eigen::VectorXd& diag() const { return d_; }

 private:
  GpFactor() = default;

  bool nngp_ = true;
  int n_ = 0;
  double log_det_ = 0.0;
  // NNGP mode
  std::vector<int> order_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<Eigen::VectorXd> coef_;
  Eigen::VectorXd d_;
  // dense mode
  Eigen::MatrixXd prec_;
};

}  // namespace zinb
