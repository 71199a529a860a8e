#include "zinb/chain_state.hpp"

#include "zinb/errors.hpp"

namespace zinb {

ChainState ChainState::initial(const PanelDataset& data,
                               const PriorSpec& priors, Rng& rng) {
  const int p1 = data.n_covariates() + 1;
  const int s = data.n_locations();
  const int t = data.n_times();
  const int n = data.n_obs();

  ChainState st;
  st.alpha = Eigen::VectorXd::Zero(p1);
  st.beta = Eigen::VectorXd::Zero(p1);
  st.a = Eigen::VectorXd::Zero(s);
  st.b = Eigen::VectorXd::Zero(t);
  st.c = Eigen::VectorXd::Zero(s);
  st.d = Eigen::VectorXd::Zero(t);
  st.eps11 = Eigen::VectorXd::Zero(s);
  st.eps12 = Eigen::VectorXd::Zero(t);
  st.eps21 = Eigen::VectorXd::Zero(s);
  st.eps22 = Eigen::VectorXd::Zero(t);
  st.l11 = st.l21 = priors.a_l1 / priors.b_l1;
  st.l12 = st.l22 = priors.a_l2 / priors.b_l2;
  st.w.resize(n);
  for (int j = 0; j < n; ++j) {
    st.w[j] = data.y[j] > 0 ? 1 : (rng.bernoulli(0.5) ? 1 : 0);
  }
  st.omega1 = Eigen::VectorXd::Constant(n, 0.25);
  st.omega2 = Eigen::VectorXd::Constant(n, 0.25);
  return st;
}

void ChainState::check_dims(const PanelDataset& data) const {
  const int p1 = data.n_covariates() + 1;
  const int s = data.n_locations();
  const int t = data.n_times();
  if (alpha.size() != p1 || beta.size() != p1 || a.size() != s ||
      b.size() != t || c.size() != s || d.size() != t || eps11.size() != s ||
      eps12.size() != t || eps21.size() != s || eps22.size() != t) {
    throw ContractError("chain state dimensions do not match dataset");
  }
}

}  // namespace zinb
