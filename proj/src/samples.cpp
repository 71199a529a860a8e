#include "zinb/samples.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zinb/errors.hpp"

namespace zinb {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void PosteriorSamples::add_group(const std::string& name,
                                 std::vector<std::string> columns, int n_rows) {
  if (draws_.count(name) != 0) {
    throw ContractError("samples: duplicate group " + name);
  }
  if (!order_.empty() && n_rows != n_rows_) {
    throw ContractError("samples: inconsistent draw counts");
  }
  n_rows_ = n_rows;
  order_.push_back(name);
  draws_[name] =
      Eigen::MatrixXd::Zero(n_rows, static_cast<int>(columns.size()));
  columns_[name] = std::move(columns);
}

void PosteriorSamples::set_row(const std::string& name, int row,
                               const Eigen::VectorXd& value) {
  auto it = draws_.find(name);
  if (it == draws_.end()) throw ContractError("samples: unknown group " + name);
  if (row < 0 || row >= it->second.rows() ||
      value.size() != it->second.cols()) {
    throw ContractError("samples: bad row for group " + name);
  }
  it->second.row(row) = value.transpose();
}

bool PosteriorSamples::has_group(const std::string& name) const {
  return draws_.count(name) != 0;
}

const Eigen::MatrixXd& PosteriorSamples::group(const std::string& name) const {
  const auto it = draws_.find(name);
  if (it == draws_.end()) throw ContractError("samples: unknown group " + name);
  return it->second;
}

const std::vector<std::string>& PosteriorSamples::columns(
    const std::string& name) const {
  const auto it = columns_.find(name);
  if (it == columns_.end()) {
    throw ContractError("samples: unknown group " + name);
  }
  return it->second;
}

void PosteriorSamples::write_dir(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& name : order_) {
    std::ofstream out(dir + "/" + name + ".csv");
    if (!out) throw DataError("cannot write samples file in " + dir);
    const auto& cols = columns_.at(name);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    const auto& m = draws_.at(name);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out << (c ? "," : "") << format_double(m(r, c));
      }
      out << '\n';
    }
  }
  std::ofstream acc(dir + "/acceptance.csv");
  acc << "target,rate\n";
  for (const auto& [k, v] : acceptance) {
    acc << k << ',' << format_double(v) << '\n';
  }
}

PosteriorSamples PosteriorSamples::read_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw DataError("samples directory not found: " + dir);
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") {
      files.push_back(entry.path().filename().string());
    }
  }
  std::sort(files.begin(), files.end());

  PosteriorSamples samples;
  for (const auto& file : files) {
    const std::string name = file.substr(0, file.size() - 4);
    if (name == "acceptance") continue;  // key/value metadata, not draws
    std::ifstream in(dir + "/" + file);
    std::string line;
    if (!std::getline(in, line)) {
      throw DataError(dir + "/" + file + ": empty samples file");
    }
    std::vector<std::string> cols;
    {
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) cols.push_back(field);
    }
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      std::vector<double> row;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) {
        try {
          row.push_back(std::stod(field));
        } catch (const std::exception&) {
          throw DataError(dir + "/" + file + ":" + std::to_string(line_no) +
                          ": cannot parse '" + field + "'");
        }
      }
      if (row.size() != cols.size()) {
        throw DataError(dir + "/" + file + ":" + std::to_string(line_no) +
                        ": wrong field count");
      }
      rows.push_back(std::move(row));
    }
    samples.add_group(name, cols, static_cast<int>(rows.size()));
    Eigen::VectorXd v(static_cast<int>(cols.size()));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      for (int c = 0; c < static_cast<int>(cols.size()); ++c) v[c] = rows[r][c];
      samples.set_row(name, r, v);
    }
  }

  const std::string acc_path = dir + "/acceptance.csv";
  if (fs::exists(acc_path)) {
    std::ifstream in(acc_path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) continue;
      samples.acceptance[line.substr(0, comma)] =
          std::stod(line.substr(comma + 1));
    }
  }
  return samples;
}

}  // namespace zinb
