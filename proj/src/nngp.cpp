// Nearest-neighbor Gaussian process sparse precision factor
// (Vecchia-type approximation; Datta et al. 2016).

#include "zinb/nngp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "zinb/errors.hpp"
#include "zinb/rng.hpp"

namespace zinb {

namespace {

// Deterministic jitter for exact duplicates: the k-th repeat of a coordinate
// is shifted by k * 1e-8 * diameter along x.
void jitter_duplicates(PointList& pts, std::vector<std::string>* warnings) {
  double lo_x = pts[0][0], hi_x = pts[0][0];
  double lo_y = pts[0][1], hi_y = pts[0][1];
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const double dx = hi_x - lo_x;
  const double dy = hi_y - lo_y;
  const double diameter = std::max(std::sqrt(dx * dx + dy * dy), 1.0);
  const double step = 1e-8 * diameter;

  std::map<std::pair<double, double>, int> seen;
  int n_jittered = 0;
  for (auto& p : pts) {
    auto [it, fresh] = seen.emplace(std::make_pair(p[0], p[1]), 0);
    if (!fresh) {
      ++it->second;
      p[0] += it->second * step;
      ++n_jittered;
    }
  }
  if (n_jittered > 0 && warnings != nullptr) {
    warnings->push_back("duplicate coordinates: jittered " +
                        std::to_string(n_jittered) + " point(s) by " +
                        std::to_string(step));
  }
}

}  // namespace

NeighborSets build_neighbor_sets(const PointList& coords, int m,
                                 OrderingRule rule, std::uint64_t shuffle_seed,
                                 std::vector<std::string>* warnings) {
  const int n = static_cast<int>(coords.size());
  if (n == 0) throw ContractError("build_neighbor_sets: empty point set");
  if (n > 1 && (m < 1 || m > n - 1)) {
    throw ContractError("build_neighbor_sets: m must be in [1, S-1], got m=" +
                        std::to_string(m) + " for S=" + std::to_string(n));
  }

  NeighborSets sets;
  sets.points = coords;
  sets.m = n > 1 ? m : 0;
  jitter_duplicates(sets.points, warnings);

  sets.order.resize(n);
  std::iota(sets.order.begin(), sets.order.end(), 0);
  switch (rule) {
    case OrderingRule::kCoordSum:
      std::stable_sort(sets.order.begin(), sets.order.end(),
                       [&](int a, int b) {
                         const double sa = sets.points[a][0] + sets.points[a][1];
                         const double sb = sets.points[b][0] + sets.points[b][1];
                         return sa < sb;
                       });
      break;
    case OrderingRule::kGiven:
      break;
    case OrderingRule::kRandom: {
      Rng rng(shuffle_seed);
      for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(i + 1));
        std::swap(sets.order[i], sets.order[j]);
      }
      break;
    }
  }

  sets.neighbors.resize(n);
  std::vector<std::pair<double, int>> cand;
  for (int i = 1; i < n; ++i) {
    const int take = std::min(sets.m, i);
    cand.clear();
    cand.reserve(i);
    const Point& pi = sets.points[sets.order[i]];
    for (int j = 0; j < i; ++j) {
      cand.emplace_back(sq_dist(pi, sets.points[sets.order[j]]), j);
    }
    // Nearest earlier-ordered points; distance ties break toward the
    // smaller ordered position.
    std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
    auto& nb = sets.neighbors[i];
    nb.resize(take);
    for (int k = 0; k < take; ++k) nb[k] = cand[k].second;
    std::sort(nb.begin(), nb.end());
  }
  return sets;
}

Eigen::MatrixXd corr_matrix(const PointList& pts, double l) {
  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXd rho(n, n);
  for (int i = 0; i < n; ++i) {
    rho(i, i) = 1.0;
    for (int j = 0; j < i; ++j) {
      rho(i, j) = rho(j, i) = sq_exp_corr(pts[i], pts[j], l);
    }
  }
  return rho;
}

GpFactor GpFactor::nngp(const NeighborSets& sets, double l) {
  const int n = static_cast<int>(sets.points.size());
  GpFactor f;
  f.nngp_ = true;
  f.n_ = n;
  f.order_ = sets.order;
  f.nbrs_ = sets.neighbors;
  f.coef_.resize(n);
  f.d_ = Eigen::VectorXd::Ones(n);

  for (int i = 1; i < n; ++i) {
    const auto& nb = sets.neighbors[i];
    const int k = static_cast<int>(nb.size());
    Eigen::MatrixXd c_nn(k, k);
    Eigen::VectorXd c_ni(k);
    const Point& pi = sets.points[sets.order[i]];
    for (int a = 0; a < k; ++a) {
      const Point& pa = sets.points[sets.order[nb[a]]];
      c_ni[a] = sq_exp_corr(pa, pi, l);
      c_nn(a, a) = 1.0;
      for (int b = 0; b < a; ++b) {
        c_nn(a, b) = c_nn(b, a) =
            sq_exp_corr(pa, sets.points[sets.order[nb[b]]], l);
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(c_nn);
    if (llt.info() != Eigen::Success) {
      throw NumericalError(
          "nngp factor: singular neighbor submatrix at ordered row " +
          std::to_string(i) + " (point " + std::to_string(sets.order[i]) +
          ")");
    }
    f.coef_[i] = llt.solve(c_ni);
    const double d = 1.0 - f.coef_[i].dot(c_ni);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NumericalError(
          "nngp factor: nonpositive conditional variance at ordered row " +
          std::to_string(i) + " (point " + std::to_string(sets.order[i]) +
          ")");
    }
    f.d_[i] = std::min(d, 1.0);
  }
  f.log_det_ = f.d_.array().log().sum();
  return f;
}

GpFactor GpFactor::dense(const PointList& pts, double l) {
  const int n = static_cast<int>(pts.size());
  GpFactor f;
  f.nngp_ = false;
  f.n_ = n;
  const Eigen::MatrixXd rho = corr_matrix(pts, l);
  Eigen::LLT<Eigen::MatrixXd> llt(rho);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("dense correlation factor: matrix not positive definite");
  }
  f.log_det_ =
      2.0 * llt.matrixLLT().diagonal().array().log().sum();
  f.prec_ = llt.solve(Eigen::MatrixXd::Identity(n, n));
  return f;
}

double GpFactor::quad_form(const Eigen::VectorXd& w) const {
  if (w.size() != n_) throw ContractError("quad_form: dimension mismatch");
  if (!nngp_) return w.dot(prec_ * w);
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    double resid = w[order_[i]];
    const auto& nb = nbrs_[i];
    for (int k = 0; k < static_cast<int>(nb.size()); ++k) {
      resid -= coef_[i][k] * w[order_[nb[k]]];
    }
    total += resid * resid / d_[i];
  }
  return total;
}

double GpFactor::log_det() const { return log_det_; }

double GpFactor::log_density(const Eigen::VectorXd& w, double sigma) const {
  if (!(sigma > 0.0)) throw ContractError("log_density: sigma must be > 0");
  const double s2 = sigma * sigma;
  return -0.5 * (n_ * std::log(2.0 * M_PI * s2) + log_det_ + quad_form(w) / s2);
}

void GpFactor::add_precision(std::vector<Eigen::Triplet<double>>& out,
                             int offset, double scale) const {
  if (!nngp_) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        out.emplace_back(offset + i, offset + j, scale * prec_(i, j));
      }
    }
    return;
  }
  // rho~^{-1} = sum_i u_i u_i' / d_i with u_i = e_i - sum_k a_ik e_{N(i)k}.
  std::vector<int> idx;
  std::vector<double> val;
  for (int i = 0; i < n_; ++i) {
    const auto& nb = nbrs_[i];
    idx.assign(1, order_[i]);
    val.assign(1, 1.0);
    for (int k = 0; k < static_cast<int>(nb.size()); ++k) {
      idx.push_back(order_[nb[k]]);
      val.push_back(-coef_[i][k]);
    }
    const double inv_d = scale / d_[i];
    for (std::size_t p = 0; p < idx.size(); ++p) {
      for (std::size_t q = 0; q < idx.size(); ++q) {
        out.emplace_back(offset + idx[p], offset + idx[q],
                         inv_d * val[p] * val[q]);
      }
    }
  }
}

}  // namespace zinb
