#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zinb/kernel.hpp"

namespace zinb {

struct ChainState;

/// Column mapping for dataset ingestion. Coordinates are repeated on every
/// row of a location and must agree across repetitions.
struct CsvSchema {
  std::string count = "y";
  std::string location = "loc";
  std::string time = "time";
  std::string coord_x = "sx";
  std::string coord_y = "sy";
  std::string time_value;  // optional; default: numeric time label
  std::vector<std::string> covariates;
  bool standardize = false;  // per-column z-scoring of covariates
};

/// Observations with dense 0-based location/time indices. Sampling units may
/// be empty or have unequal sizes.
struct PanelDataset {
  Eigen::VectorXi y;             // N counts, >= 0
  Eigen::MatrixXd x;             // N x (P+1), first column all ones
  std::vector<int> loc;          // N, in [0, S)
  std::vector<int> time;         // N, in [0, T)
  PointList coords;              // S
  Eigen::VectorXd time_points;   // T, ascending w_t
  std::vector<std::string> loc_labels;   // S, original labels
  std::vector<std::string> time_labels;  // T, original labels

  int n_obs() const { return static_cast<int>(y.size()); }
  int n_locations() const { return static_cast<int>(coords.size()); }
  int n_times() const { return static_cast<int>(time_points.size()); }
  int n_covariates() const { return static_cast<int>(x.cols()) - 1; }

  /// Checks the structural invariants; throws DataError on violation.
  void validate() const;
};

/// Observation-to-effect incidence. V1 and V2 are one-hot rows, stored as the
/// single nonzero column index per observation; every row therefore sums to
/// exactly 1 by construction. at_risk holds the rows with W_j = 1 and is
/// refreshed after every at-risk update.
struct DesignMaps {
  std::vector<int> loc;
  std::vector<int> time;
  std::vector<int> at_risk;

  static DesignMaps from(const PanelDataset& data);
  void refresh_at_risk(const Eigen::VectorXi& w);
};

PanelDataset ingest_csv(const std::string& path, const CsvSchema& schema);

void write_dataset_csv(const PanelDataset& data, const CsvSchema& schema,
                       const std::string& path);

/// eta1_j = x_j'alpha + a_{s_j} + b_{t_j} + eps11_{s_j} + eps12_{t_j};
/// eta2_j = x_j'beta  + c_{s_j} + d_{t_j} + eps21_{s_j} + eps22_{t_j}.
std::pair<Eigen::VectorXd, Eigen::VectorXd> linear_predictors(
    const ChainState& state, const PanelDataset& data);

}  // namespace zinb
