// Polya-Gamma sampling.
//
// References:
//   Polson, Scott & Windle (2013), Bayesian inference for logistic models
//   using Polya-Gamma latent variables, JASA 108(504).
//   Windle (2013), PhD thesis, Algorithm 6 (exact PG(1, z) sampler).

#include "zinb/pg.hpp"

#include <cmath>
#include <limits>

#include "zinb/errors.hpp"

namespace zinb::pg {

namespace {

constexpr double kTruncPoint = 2.0 / M_PI;
constexpr int kGammaTerms = 200;     // truncation of the sum-of-gammas series
constexpr double kNormalCutoff = 170.0;

double log_pnorm(double x) {
  if (x > -30.0) {
    return std::log(0.5 * std::erfc(-x * M_SQRT1_2));
  }
  // Asymptotic expansion of the lower normal tail.
  const double x2 = x * x;
  return -0.5 * x2 - std::log(-x) - 0.5 * std::log(2.0 * M_PI) +
         std::log1p(-1.0 / x2 + 3.0 / (x2 * x2));
}

// log CDF at x of an inverse Gaussian with mean 1/z and shape 1 (z >= 0;
// z = 0 is the one-sided stable limit).
double log_pigauss(double x, double z) {
  const double rx = 1.0 / std::sqrt(x);
  const double la = log_pnorm(rx * (x * z - 1.0));
  const double lb = 2.0 * z + log_pnorm(-rx * (x * z + 1.0));
  const double hi = std::max(la, lb);
  return hi + std::log(std::exp(la - hi) + std::exp(lb - hi));
}

// Piecewise coefficients a_n(x) of the alternating series for the tilted
// Jacobi density.
double a_coef(int n, double x) {
  const double np = n + 0.5;
  if (x > kTruncPoint) {
    return M_PI * np * std::exp(-np * np * M_PI * M_PI * x * 0.5);
  }
  return M_PI * np * std::pow(2.0 / (M_PI * x), 1.5) *
         std::exp(-2.0 * np * np / x);
}

// Inverse Gaussian IG(1/z, 1) truncated to (0, t].
double rtigauss(double z, double t, Rng& rng) {
  const double mu = z > 0.0 ? 1.0 / z : std::numeric_limits<double>::infinity();
  if (mu > t) {
    for (;;) {
      double e1;
      double e2;
      do {
        e1 = rng.exponential();
        e2 = rng.exponential();
      } while (e1 * e1 > 2.0 * e2 / t);
      const double x = t / ((1.0 + t * e1) * (1.0 + t * e1));
      if (std::log(rng.uniform()) <= -0.5 * z * z * x) return x;
    }
  }
  double x = t + 1.0;
  while (x > t) x = rng.inv_gauss(mu, 1.0);
  return x;
}

// Exact PG(1, c) draw (alternating-series rejection on J*(1, |c|/2) / 4).
double sample_pg1(double c, Rng& rng) {
  const double z = 0.5 * std::fabs(c);
  const double t = kTruncPoint;
  const double k = z * z * 0.5 + M_PI * M_PI * 0.125;
  const double log_p = std::log(M_PI / (2.0 * k)) - k * t;
  const double log_q = std::log(2.0) - z + log_pigauss(t, z);
  const double prob_exp = 1.0 / (1.0 + std::exp(log_q - log_p));

  for (;;) {
    const double x = rng.uniform() < prob_exp ? t + rng.exponential() / k
                                              : rtigauss(z, t, rng);
    double series = a_coef(0, x);
    const double y = rng.uniform() * series;
    for (int n = 1;; ++n) {
      if (n & 1) {
        series -= a_coef(n, x);
        if (y <= series) return 0.25 * x;
      } else {
        series += a_coef(n, x);
        if (y > series) break;
      }
    }
  }
}

// Fractional shape 0 < b < 1 via the truncated sum-of-gammas representation
// omega = (1/2pi^2) sum_k g_k / ((k - 1/2)^2 + c^2 / 4pi^2); the analytic
// mean of the dropped tail is added back so the mean is exact.
double sample_pg_frac(double b, double c, Rng& rng) {
  const double shift = c * c / (4.0 * M_PI * M_PI);
  double series = 0.0;
  double partial_inverse_sum = 0.0;
  for (int k = 1; k <= kGammaTerms; ++k) {
    const double denom = (k - 0.5) * (k - 0.5) + shift;
    series += rng.gamma(b, 1.0) / denom;
    partial_inverse_sum += 1.0 / denom;
  }
  const double scale = 1.0 / (2.0 * M_PI * M_PI);
  const double tail_mean = mean(b, c) - b * scale * partial_inverse_sum;
  return scale * series + std::max(tail_mean, 0.0);
}

}  // namespace

double mean(double b, double c) {
  if (std::fabs(c) < 1e-6) return b * 0.25 * (1.0 - c * c / 12.0);
  return b / (2.0 * c) * std::tanh(0.5 * c);
}

double variance(double b, double c) {
  const double a = std::fabs(c);
  if (a < 1e-3) return b / 24.0 * (1.0 - a * a / 5.0);
  // (sinh(c) - c) sech^2(c/2) rescaled by e^{-|c|} to avoid overflow.
  const double em = std::exp(-a);
  const double em2 = em * em;
  const double num = 0.5 * (1.0 - em2) - a * em;
  const double den = 1.0 + 2.0 * em + em2;
  return b * num / (den * a * a * a);
}

double sample_pg(const PgParams& params, Rng& rng) {
  const double b = params.b;
  const double c = params.c;
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw ContractError("sample_pg: shape b must be positive and finite");
  }
  if (!std::isfinite(c)) {
    throw ContractError("sample_pg: tilt c must be finite");
  }
  if (b > kNormalCutoff) {
    const double mu = mean(b, c);
    const double sd = std::sqrt(variance(b, c));
    double draw;
    do {
      draw = rng.normal(mu, sd);
    } while (draw <= 0.0);
    return draw;
  }
  double total = 0.0;
  const double whole = std::floor(b);
  for (int i = 0; i < static_cast<int>(whole); ++i) {
    total += sample_pg1(c, rng);
  }
  const double frac = b - whole;
  if (frac > 1e-12) total += sample_pg_frac(frac, c, rng);
  return total;
}

Eigen::VectorXd sample_pg_vector(const Eigen::VectorXd& b_vec,
                                 const Eigen::VectorXd& c_vec, Rng& rng) {
  if (b_vec.size() != c_vec.size()) {
    throw ContractError("sample_pg_vector: length mismatch");
  }
  Eigen::VectorXd out(b_vec.size());
  for (Eigen::Index i = 0; i < b_vec.size(); ++i) {
    out[i] = sample_pg(PgParams{b_vec[i], c_vec[i]}, rng);
  }
  return out;
}

}  // namespace zinb::pg
