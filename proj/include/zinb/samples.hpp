#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace zinb {

/// Retained post-burn-in draws, columnar by parameter group. Groups are kept
/// in insertion order for deterministic output; one CSV per group on disk
/// (columns = components, rows = draws).
class PosteriorSamples {
 public:
  void add_group(const std::string& name, std::vector<std::string> columns,
                 int n_rows);
  void set_row(const std::string& name, int row, const Eigen::VectorXd& value);

  bool has_group(const std::string& name) const;
  const Eigen::MatrixXd& group(const std::string& name) const;
  const std::vector<std::string>& columns(const std::string& name) const;
  const std::vector<std::string>& group_names() const { return order_; }
  int n_draws() const { return n_rows_; }

  std::map<std::string, double> acceptance;

  void write_dir(const std::string& dir) const;
  static PosteriorSamples read_dir(const std::string& dir);

 private:
  std::vector<std::string> order_;
  std::map<std::string, Eigen::MatrixXd> draws_;
  std::map<std::string, std::vector<std::string>> columns_;
  int n_rows_ = 0;
};

}  // namespace zinb
