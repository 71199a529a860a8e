#include "zinb/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "zinb/chain_state.hpp"
#include "zinb/errors.hpp"

namespace zinb {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos
                      ? std::string()
                      : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& what,
                    std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": cannot parse " +
                    what + " value '" + s + "'");
  }
}

bool numeric_label(const std::string& s, double* out) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) return false;
    *out = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void PanelDataset::validate() const {
  const int n = n_obs();
  const int s_count = n_locations();
  const int t_count = n_times();
  if (static_cast<int>(loc.size()) != n || static_cast<int>(time.size()) != n ||
      x.rows() != n) {
    throw DataError("dataset: inconsistent observation counts");
  }
  if (s_count == 0 || t_count == 0) {
    throw DataError("dataset: needs at least one location and one time");
  }
  for (int j = 0; j < n; ++j) {
    if (y[j] < 0) throw DataError("dataset: negative count at row " + std::to_string(j));
    if (loc[j] < 0 || loc[j] >= s_count || time[j] < 0 || time[j] >= t_count) {
      throw DataError("dataset: index out of range at row " + std::to_string(j));
    }
  }
  if (!x.allFinite()) throw DataError("dataset: non-finite covariate");
  if (n > 0 && (x.col(0).array() != 1.0).any()) {
    throw DataError("dataset: first design column must be the intercept");
  }
  for (const auto& p : coords) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
      throw DataError("dataset: non-finite coordinate");
    }
  }
  for (int t = 1; t < t_count; ++t) {
    if (!(time_points[t] >= time_points[t - 1])) {
      throw DataError("dataset: time points must be ascending");
    }
  }
}

DesignMaps DesignMaps::from(const PanelDataset& data) {
  DesignMaps maps;
  maps.loc = data.loc;
  maps.time = data.time;
  maps.at_risk.reserve(data.n_obs());
  return maps;
}

void DesignMaps::refresh_at_risk(const Eigen::VectorXi& w) {
  at_risk.clear();
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    if (w[j] == 1) at_risk.push_back(j);
  }
}

PanelDataset ingest_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty dataset file: " + path);
  const auto header = split_line(line);

  auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw ConfigError("schema: column '" + name + "' not found in " + path);
    }
    return static_cast<int>(it - header.begin());
  };

  const int col_y = column(schema.count);
  const int col_loc = column(schema.location);
  const int col_time = column(schema.time);
  const int col_sx = column(schema.coord_x);
  const int col_sy = column(schema.coord_y);
  const int col_tv = schema.time_value.empty() ? -1 : column(schema.time_value);
  std::vector<int> col_x;
  for (const auto& name : schema.covariates) col_x.push_back(column(name));

  struct Row {
    double y;
    std::string loc, time;
    Point coord;
    double time_value;
    std::vector<double> x;
  };
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto fields = split_line(line);
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": expected " + std::to_string(header.size()) +
                      " fields, got " + std::to_string(fields.size()));
    }
    Row row;
    row.y = parse_double(fields[col_y], "count", line_no);
    if (!(row.y >= 0.0) || std::floor(row.y) != row.y) {
      throw DataError("line " + std::to_string(line_no) +
                      ": count must be a nonnegative integer, got '" +
                      fields[col_y] + "'");
    }
    row.loc = fields[col_loc];
    row.time = fields[col_time];
    row.coord = {parse_double(fields[col_sx], "coordinate", line_no),
                 parse_double(fields[col_sy], "coordinate", line_no)};
    if (!std::isfinite(row.coord[0]) || !std::isfinite(row.coord[1])) {
      throw DataError("line " + std::to_string(line_no) +
                      ": location has no finite coordinates");
    }
    if (col_tv >= 0) {
      row.time_value = parse_double(fields[col_tv], "time value", line_no);
    } else if (!numeric_label(row.time, &row.time_value)) {
      throw DataError("line " + std::to_string(line_no) +
                      ": time label '" + row.time +
                      "' is not numeric and no time-value column is mapped");
    }
    for (const int c : col_x) {
      const double v = parse_double(fields[c], "covariate", line_no);
      if (!std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) +
                        ": non-finite covariate");
      }
      row.x.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("dataset has no observations: " + path);

  // Dense re-indexing. Locations sort numerically when all labels are
  // numeric, lexicographically otherwise; times sort by their time value.
  std::vector<std::string> loc_labels;
  for (const auto& r : rows) loc_labels.push_back(r.loc);
  std::sort(loc_labels.begin(), loc_labels.end());
  loc_labels.erase(std::unique(loc_labels.begin(), loc_labels.end()),
                   loc_labels.end());
  bool all_numeric = true;
  std::vector<double> numeric;
  for (const auto& s : loc_labels) {
    double v;
    if (!numeric_label(s, &v)) {
      all_numeric = false;
      break;
    }
    numeric.push_back(v);
  }
  if (all_numeric) {
    std::vector<int> perm(loc_labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int i, int j) { return numeric[i] < numeric[j]; });
    std::vector<std::string> sorted;
    for (const int i : perm) sorted.push_back(loc_labels[i]);
    loc_labels = std::move(sorted);
  }
  std::map<std::string, int> loc_index;
  for (int i = 0; i < static_cast<int>(loc_labels.size()); ++i) {
    loc_index[loc_labels[i]] = i;
  }

  std::map<std::string, std::pair<double, int>> time_index;  // label -> (value, idx)
  for (const auto& r : rows) {
    auto [it, fresh] = time_index.emplace(r.time, std::make_pair(r.time_value, -1));
    if (!fresh && it->second.first != r.time_value) {
      throw DataError("time label '" + r.time + "' has inconsistent time values");
    }
  }
  std::vector<std::pair<double, std::string>> times;
  for (const auto& [label, v] : time_index) times.emplace_back(v.first, label);
  std::sort(times.begin(), times.end());
  for (int i = 0; i < static_cast<int>(times.size()); ++i) {
    time_index[times[i].second].second = i;
  }

  const int n = static_cast<int>(rows.size());
  const int s_count = static_cast<int>(loc_labels.size());
  const int t_count = static_cast<int>(times.size());
  const int p = static_cast<int>(schema.covariates.size());

  PanelDataset data;
  data.y.resize(n);
  data.x.resize(n, p + 1);
  data.loc.resize(n);
  data.time.resize(n);
  data.coords.assign(s_count, Point{std::nan(""), std::nan("")});
  data.time_points.resize(t_count);
  data.loc_labels = loc_labels;
  for (const auto& [v, label] : times) data.time_labels.push_back(label);
  for (int t = 0; t < t_count; ++t) data.time_points[t] = times[t].first;

  for (int j = 0; j < n; ++j) {
    const Row& r = rows[j];
    data.y[j] = static_cast<int>(r.y);
    data.loc[j] = loc_index.at(r.loc);
    data.time[j] = time_index.at(r.time).second;
    data.x(j, 0) = 1.0;
    for (int k = 0; k < p; ++k) data.x(j, k + 1) = r.x[k];
    Point& stored = data.coords[data.loc[j]];
    if (std::isnan(stored[0])) {
      stored = r.coord;
    } else if (stored[0] != r.coord[0] || stored[1] != r.coord[1]) {
      throw DataError("location '" + r.loc +
                      "' has inconsistent coordinates across rows");
    }
  }

  if (schema.standardize && p > 0) {
    for (int k = 1; k <= p; ++k) {
      const double mu = data.x.col(k).mean();
      const double sd = std::sqrt(
          (data.x.col(k).array() - mu).square().sum() / std::max(n - 1, 1));
      if (sd > 0.0) data.x.col(k) = (data.x.col(k).array() - mu) / sd;
    }
  }

  data.validate();
  return data;
}

void write_dataset_csv(const PanelDataset& data, const CsvSchema& schema,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write dataset file: " + path);
  out << schema.count << ',' << schema.location << ',' << schema.time << ','
      << schema.coord_x << ',' << schema.coord_y;
  for (const auto& name : schema.covariates) out << ',' << name;
  out << '\n';
  for (int j = 0; j < data.n_obs(); ++j) {
    out << data.y[j] << ',' << data.loc_labels[data.loc[j]] << ','
        << data.time_labels[data.time[j]] << ','
        << format_double(data.coords[data.loc[j]][0]) << ','
        << format_double(data.coords[data.loc[j]][1]);
    for (int k = 1; k <= data.n_covariates(); ++k) {
      out << ',' << format_double(data.x(j, k));
    }
    out << '\n';
  }
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> linear_predictors(
    const ChainState& state, const PanelDataset& data) {
  state.check_dims(data);
  const int n = data.n_obs();
  Eigen::VectorXd eta1 = data.x * state.alpha;
  Eigen::VectorXd eta2 = data.x * state.beta;
  for (int j = 0; j < n; ++j) {
    const int s = data.loc[j];
    const int t = data.time[j];
    eta1[j] += state.a[s] + state.b[t] + state.eps11[s] + state.eps12[t];
    eta2[j] += state.c[s] + state.d[t] + state.eps21[s] + state.eps22[t];
  }
  return {std::move(eta1), std::move(eta2)};
}

}  // namespace zinb
