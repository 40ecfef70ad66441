#include "permstat/multiplicative.hpp"

#include <cmath>
#include <stdexcept>

namespace permstat {

std::complex<double> mean_value(const WeightSystem& w, const FhatC& fhat, int n) {
  if (n < 0 || n > w.n_max()) throw std::out_of_range("mean_value: n out of range");
  if (int(fhat.size()) < n + 1)
    throw std::invalid_argument("mean_value: fhat must have entries 1..n");
  if (w.p_dbl(n) == 0.0) throw std::domain_error("mean_value: p_n = 0");
  CSeries L(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) L.at(j) = w.d_dbl(j) * fhat[j] / double(j);
  CSeries M = series_exp(L);
  return M.at(size_t(n)) / w.p_dbl(n);
}

CRat mean_value_exact(const WeightSystem& w, const FhatRat& fhat, int n) {
  if (n < 0 || n > w.n_max()) throw std::out_of_range("mean_value_exact: n out of range");
  if (int(fhat.size()) < n + 1)
    throw std::invalid_argument("mean_value_exact: fhat must have entries 1..n");
  if (w.p(n) == 0) throw std::domain_error("mean_value_exact: p_n = 0");
  CRatSeries L(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    CRat c = fhat[j];
    c.re *= w.d(j); c.re /= j;
    c.im *= w.d(j); c.im /= j;
    L.at(j) = c;
  }
  CRatSeries M = series_exp(L);
  return M.at(size_t(n)) / CRat(w.p(n));
}

MeanValueReport mean_report(const WeightSystem& w, const FhatC& fhat, int n,
                            double p, double u) {
  if (int(fhat.size()) < n + 1)
    throw std::invalid_argument("mean_report: fhat must have entries 1..n");
  for (int j = 1; j <= n; ++j)
    if (std::abs(fhat[j]) > 1.0 + 1e-12)
      throw std::invalid_argument("mean_report: |fhat(j)| <= 1 required");
  double dminus = w.d_minus() ? w.d_minus()->get_d() : 0.0;
  if (!(p > std::max(1.0, dminus > 0 ? 1.0 / dminus : 1.0)))
    throw std::invalid_argument("mean_report: need p > max{1, 1/d^-}");

  MeanValueReport rep;
  rep.u = u;
  rep.exact_mean = mean_value(w, fhat, n);

  std::complex<double> L1 = 0.0;
  std::complex<double> corr = 0.0;
  double pn = w.p_dbl(n);
  for (int j = 1; j <= n; ++j) {
    std::complex<double> g = w.d_dbl(j) * (fhat[j] - 1.0) / double(j);
    L1 += g;
    corr += g * (w.p_dbl(n - j) / pn - 1.0);
  }
  rep.main_term = std::exp(L1);
  rep.corrected_term = rep.main_term * (1.0 + corr);
  rep.delta = std::abs(rep.exact_mean - rep.main_term);

  if (p == kPInf) {
    double m = 0.0;
    for (int j = 1; j <= n; ++j) m = std::max(m, std::abs(fhat[j] - 1.0));
    rep.rho_p = m;
  } else {
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += std::pow(std::abs(fhat[j] - 1.0), p) / j;
    rep.rho_p = std::pow(s, 1.0 / p);
  }

  double eu = 0.0;
  for (int j = 1; j <= n; ++j) {
    double a = std::abs(fhat[j] - 1.0);
    if (a > u) eu += a / j;
  }
  rep.E_u = std::exp(2.0 * eu);

  if (w.d_minus() && *w.d_minus() > 0) {
    // sum_{j<=n} p_j and the two shared pieces
    double sp = 0.0;
    for (int j = 0; j <= n; ++j) sp += w.p_dbl(j);
    double t1 = 0.0, t3 = 0.0;
    for (int k = 1; k <= n; ++k) {
      double a = std::abs(fhat[k] - 1.0);
      t1 += a * w.p_dbl(n - k);
      t3 += a;
    }
    double bound;
    if (dminus < 1.0) {
      double t2 = 0.0;
      for (int k = 1; k <= n; ++k)
        t2 += std::abs(fhat[k] - 1.0) * std::pow(double(k), dminus - 1.0);
      bound = t1 / sp + t2 / std::pow(double(n), dminus) + t3 / n;
    } else {
      double t2 = 0.0;
      for (int k = 1; k <= n; ++k)
        t2 += std::abs(fhat[k] - 1.0) * (1.0 + std::log(double(n) / k));
      bound = t1 / sp + t2 / n;
    }
    rep.delta_bound = bound;
    if (bound > 0.0) rep.measured_c = rep.delta / bound;
  }
  return rep;
}

Rat weighted_S_exact(const WeightSystem& w, const RatSeries& a, int m) {
  if (m < 0 || size_t(m) > a.order() || m > w.n_max())
    throw std::out_of_range("weighted_S_exact: m out of range");
  Rat s(0);
  for (int k = 1; k <= m; ++k) s += a.at(size_t(k)) * k * w.p(m - k);
  return s;
}

double weighted_S_dbl(const WeightSystem& w, const DSeries& a, int m) {
  if (m < 0 || size_t(m) > a.order() || m > w.n_max())
    throw std::out_of_range("weighted_S_dbl: m out of range");
  double s = 0.0;
  for (int k = 1; k <= m; ++k) s += a.at(size_t(k)) * k * w.p_dbl(m - k);
  return s;
}

FundthmResidual fundthm_check(const WeightSystem& w, const DSeries& a, int n) {
  if (!w.d_minus() || !(*w.d_minus() > 0))
    throw std::domain_error("fundthm_check: requires d^- > 0");
  const int M = int(a.order());
  if (n < 1 || n > M || M > w.n_max())
    throw std::out_of_range("fundthm_check: need 1 <= n <= order(a) <= n_max");
  double theta = std::min(1.0, w.d_minus()->get_d());
  double x = std::exp(-1.0 / n);

  double conv = 0.0;
  for (int k = 0; k <= n; ++k) conv += a.at(size_t(k)) * w.p_dbl(n - k);
  double abel = 0.0;
  for (int k = M; k >= 0; --k) abel = abel * x + a.at(size_t(k));
  double pn = w.p_dbl(n);
  FundthmResidual r;
  r.lhs = std::abs(conv / pn - abel - weighted_S_dbl(w, a, n) / (n * pn));

  double b1 = 0.0;
  for (int j = 1; j <= n; ++j)
    b1 += std::abs(weighted_S_dbl(w, a, j)) / w.p_at(std::exp(-1.0 / j)) *
          std::pow(double(j), theta - 1.0);
  double b2 = 0.0;
  for (int j = n + 1; j <= M; ++j)
    b2 += std::abs(weighted_S_dbl(w, a, j)) / j * std::exp(-double(j) / n);
  r.rhs_bracket = b1 / std::pow(double(n), theta) + b2 / w.p_at(x);
  r.ratio = r.rhs_bracket > 0.0 ? r.lhs / r.rhs_bracket : 0.0;
  return r;
}

VoronoiResult voronoi_mean(const std::vector<double>& r, const std::vector<double>& a, int n) {
  if (int(r.size()) < n + 1 || int(a.size()) < n + 1)
    throw std::invalid_argument("voronoi_mean: need coefficients 0..n");
  double rsum = 0.0;
  for (int j = 0; j <= n; ++j) rsum += r[j];
  if (!(rsum > 0.0)) throw std::domain_error("voronoi_mean: sum of r_j must be positive");

  std::vector<double> s(n + 1), D(n + 1);
  double acc = 0.0, dacc = 0.0;
  for (int k = 0; k <= n; ++k) {
    acc += a[k];
    dacc += double(k) * a[k];
    s[k] = acc;
    D[k] = dacc;
  }
  VoronoiResult out;
  double num = 0.0, dnum = 0.0;
  for (int j = 0; j <= n; ++j) {
    num += r[j] * s[n - j];
    dnum += r[j] * D[n - j];
  }
  out.mean = num / rsum;
  out.d_condition = dnum / rsum / n;
  double x = std::exp(-1.0 / n);
  double abel = 0.0;
  for (int k = int(a.size()) - 1; k >= 0; --k) abel = abel * x + a[k];
  out.abel_proxy = abel;
  return out;
}

}  // namespace permstat
