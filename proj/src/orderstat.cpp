#include "permstat/orderstat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "permstat/normal.hpp"
#include "permstat/sampler.hpp"
#include "permstat/series.hpp"
#include "permstat/snk.hpp"
#include "permstat/zeta.hpp"

namespace permstat {

namespace {

// deterministic odd-only sieve, grown on demand; exact computations here are
// single-threaded by contract
std::vector<long>& primes_upto(long n) {
  static std::vector<long> primes{2, 3};
  static long sieved_to = 3;
  if (n > sieved_to) {
    long limit = std::max(n, sieved_to * 2);
    std::vector<bool> comp(size_t(limit + 1), false);
    primes.clear();
    for (long i = 2; i <= limit; ++i) {
      if (!comp[size_t(i)]) {
        primes.push_back(i);
        for (long j = i * i; j <= limit; j += i) comp[size_t(j)] = true;
      }
    }
    sieved_to = limit;
  }
  return primes;
}

Rat harmonic(long m) {
  Rat h(0);
  for (long j = 1; j <= m; ++j) h += Rat(1, j);
  return h;
}

}  // namespace

Rat expected_Dnk(long n, long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("expected_Dnk: n, k must be >= 1");
  if (k > n) return Rat(0);
  return harmonic(n / k) / k;
}

Rat prob_Dnk_zero(long n, long k) {
  if (k < 2) throw std::invalid_argument("prob_Dnk_zero: k must be >= 2");
  Rat p(1);
  for (long j = 1; j <= n / k; ++j) p *= Rat(j * k - 1, j * k);
  return p;
}

double prob_Dnk_zero_series(long n, long k) {
  if (k < 2) throw std::invalid_argument("prob_Dnk_zero_series: k must be >= 2");
  DSeries b = series_binom<double>(k, 1.0 / double(k), size_t(n));
  return series_prefix(b).at(size_t(n));
}

Rat dnk_bracket(long n, long k) {
  return expected_Dnk(n, k) - 1 + prob_Dnk_zero(n, k);
}

namespace {

// float bracket E D - 1 + P(D=0) for m = [n/k] >= 1, compensated
double bracket_dbl(long k, long m) {
  double h = 0.0, hc = 0.0;     // Neumaier for H_m
  double lg = 0.0, lgc = 0.0;   // and for sum log(1 - 1/(jk))
  for (long j = 1; j <= m; ++j) {
    double x = 1.0 / double(j);
    double t = h + x;
    hc += (std::abs(h) >= x) ? (h - t) + x : (x - t) + h;
    h = t;
    double lx = std::log1p(-1.0 / (double(j) * double(k)));
    double t2 = lg + lx;
    lgc += (std::abs(lg) >= std::abs(lx)) ? (lg - t2) + lx : (lx - t2) + lg;
    lg = t2;
  }
  return (h + hc) / double(k) - 1.0 + std::exp(lg + lgc);
}

}  // namespace

double mu_exact(long n) {
  if (n < 1) throw std::invalid_argument("mu_exact: n must be >= 1");
  // brackets vanish when [n/p^s] <= 1, so only prime powers <= n/2 matter
  auto& primes = primes_upto(std::max(2L, n / 2));
  double mu = 0.0, c = 0.0;
  for (long p : primes) {
    if (p > n / 2) break;
    double logp = std::log(double(p));
    for (long pk = p; pk <= n / 2; pk *= p) {
      long m = n / pk;
      double b = m <= 64 ? dnk_bracket(n, pk).get_d() : bracket_dbl(pk, m);
      double term = b * logp;
      double t = mu + term;
      c += (std::abs(mu) >= std::abs(term)) ? (mu - t) + term : (term - t) + mu;
      mu = t;
      if (pk > n / (2 * p)) break;  // next power would exceed n/2
    }
  }
  return mu + c;
}

double mean_logP(long n) {
  if (n < 1) throw std::invalid_argument("mean_logP: n must be >= 1");
  double s = 0.0, c = 0.0;
  for (long j = 2; j <= n; ++j) {
    double term = std::log(double(j)) / double(j);
    double t = s + term;
    c += (s >= term) ? (s - t) + term : (term - t) + s;
    s = t;
  }
  return s + c;
}

double mean_logO(long n) { return mean_logP(n) - mu_exact(n); }

double EtModel::rk(double x) const { return c_skew * (1.0 - x * x) + c_loc; }

double EtModel::cdf(double x, bool mean_centered) const {
  double corr = c_skew * (1.0 - x * x);
  if (!mean_centered) corr += c_loc;
  return norm_cdf(x) + corr * std::exp(-0.5 * x * x) / std::sqrt(std::log(double(n)));
}

EtModel et_model(EtVariant variant, int n, int k, double theta) {
  if (n < 3) throw std::invalid_argument("et_model: n must be >= 3 (loglog n defined)");
  EtModel m;
  m.variant = variant;
  m.n = n;
  const double ln = std::log(double(n));
  const double sqrt2pi = std::sqrt(2.0 * M_PI);
  switch (variant) {
    case EtVariant::uniform:
      m.gamma0 = 1.0;
      m.C0 = 0.0;
      m.centering = mean_logO(n);
      m.scale = std::pow(ln, 1.5) / std::sqrt(3.0);
      m.c_skew = std::sqrt(3.0) / (8.0 * sqrt2pi);  // = 3^{3/2}/(24 sqrt(2pi))
      m.c_loc = 0.0;
      break;
    case EtVariant::ewens:
      if (!(theta > 0)) throw std::invalid_argument("et_model: theta must be > 0");
      m.theta = theta;
      m.centering = 0.5 * theta * ln * ln - theta * ln * std::log(ln);
      m.scale = theta * std::pow(ln, 1.5) / std::sqrt(3.0);
      m.c_skew = 0.0;  // no second-order term for the Ewens variant
      m.c_loc = 0.0;
      break;
    case EtVariant::snk: {
      if (k < 2) throw std::invalid_argument("et_model: snk needs k >= 2");
      m.k = k;
      SnkStructure s = snk_structure(k);
      m.gamma0 = s.gamma0.get_d();
      m.C0 = constant_C0(k);
      m.centering = std::numeric_limits<double>::quiet_NaN();  // caller policy
      m.scale = std::sqrt(m.gamma0 / 3.0) * std::pow(ln, 1.5);
      m.c_skew = std::sqrt(3.0 / m.gamma0) / (8.0 * sqrt2pi);
      m.c_loc = -std::sqrt(3.0 / m.gamma0) * m.C0 / sqrt2pi;
      break;
    }
  }
  return m;
}

namespace {

// log of the group order of a sampled type via prime->max exponent over the
// cycle lengths present
struct LogOrderEvaluator {
  std::vector<int> spf;  // smallest prime factor
  explicit LogOrderEvaluator(int n) : spf(n + 1, 0) {
    for (int i = 2; i <= n; ++i)
      if (spf[i] == 0)
        for (int j = i; j <= n; j += i)
          if (spf[j] == 0) spf[j] = i;
  }
  double operator()(const CycleType& t) const {
    // small map on the stack; cycle counts are ~log n
    std::vector<std::pair<int, int>> fac;
    for (int j = 2; j <= t.n; ++j) {
      if (t.alpha[j] == 0) continue;
      int m = j;
      while (m > 1) {
        int p = spf[m], e = 0;
        while (m % p == 0) { m /= p; ++e; }
        bool found = false;
        for (auto& [q, qe] : fac)
          if (q == p) { qe = std::max(qe, e); found = true; break; }
        if (!found) fac.emplace_back(p, e);
      }
    }
    double lo = 0.0;
    for (auto& [p, e] : fac) lo += e * std::log(double(p));
    return lo;
  }
};

}  // namespace

EtReport et_experiment(EtVariant variant, int n, long R, std::uint64_t seed,
                       int k, double theta, int threads) {
  EtModel model = et_model(variant, n, k, theta);
  WeightSystem w = variant == EtVariant::ewens ? make_ewens(Rat(theta), n, false)
                                               : make_uniform(n, false);
  LogOrderEvaluator logO(n);
  SampleConfig cfg;
  cfg.n = n;
  cfg.R = R;
  cfg.seed = seed;
  cfg.snk_k = variant == EtVariant::snk ? k : 0;
  cfg.threads = threads;
  std::vector<double> vals = run_samples(cfg, w, [&](const CycleType& t) { return logO(t); });

  bool mean_centered = variant != EtVariant::uniform;
  double centering;
  double sample_mean = 0.0;
  for (double v : vals) sample_mean += v;
  sample_mean /= double(vals.size());
  centering = mean_centered ? sample_mean : model.centering;
  double var = 0.0;
  for (double v : vals) var += (v - sample_mean) * (v - sample_mean);
  double sd = std::sqrt(var / double(vals.size()));
  for (double& v : vals) v = (v - centering) / sd;

  EmpiricalCdf F(std::move(vals));
  EtReport rep;
  rep.variant = variant;
  rep.n = n;
  rep.R = R;
  rep.seed = seed;
  rep.centering_used = mean_centered ? "sample-mean" : "exact-mean";
  rep.centering_value = centering;
  rep.model_scale = model.scale;
  rep.scale_used = sd;
  rep.sup_vs_Phi = sup_distance(F, [](double x) { return norm_cdf(x); });
  rep.sup_vs_model =
      sup_distance(F, [&](double x) { return model.cdf(x, mean_centered); });
  return rep;
}

}  // namespace permstat
