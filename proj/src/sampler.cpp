#include "permstat/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "permstat/snk.hpp"

namespace permstat {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t key) {
  std::uint64_t x = key;
  for (auto& si : s_) si = splitmix64(x);
}

std::uint64_t Rng::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() { return double(next() >> 11) * 0x1p-53; }

long Rng::uniform_long(long n) {
  // rejection to avoid modulo bias; n is tiny relative to 2^64
  std::uint64_t un = std::uint64_t(n);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return long(x % un) + 1;
}

Rng derive_rng(std::uint64_t seed, std::uint64_t replicate) {
  return Rng(seed ^ replicate);
}

namespace {

CycleType sample_uniform_type(int n, Rng& rng) {
  CycleType t;
  t.n = n;
  t.alpha.assign(n + 1, 0);
  int m = n;
  while (m > 0) {
    long j = rng.uniform_long(m);
    t.alpha[j] += 1;
    m -= int(j);
  }
  return t;
}

CycleType sample_ewens_feller(const WeightSystem& w, int n, Rng& rng) {
  // Feller coupling: B_i ~ Bernoulli(theta/(theta+i-1)) scanning i = n..1,
  // with B at position n+1 forced; spacings between ones are cycle lengths.
  double theta = w.theta().get_d();
  CycleType t;
  t.n = n;
  t.alpha.assign(n + 1, 0);
  int len = 0;
  for (int i = n; i >= 1; --i) {
    ++len;
    double pr = theta / (theta + i - 1);
    if (rng.uniform01() < pr) {
      t.alpha[len] += 1;
      len = 0;
    }
  }
  return t;
}

CycleType sample_scan_type(const WeightSystem& w, int n, Rng& rng) {
  CycleType t;
  t.n = n;
  t.alpha.assign(n + 1, 0);
  int m = n;
  while (m > 0) {
    double pm = w.p_dbl(m);
    if (!(pm > 0.0))
      throw std::domain_error("sample_cycle_type: p_m = 0 on remaining mass (degenerate weights)");
    double r = rng.uniform01() * (m * pm);
    double acc = 0.0;
    int j = m;
    for (int jj = 1; jj <= m; ++jj) {
      acc += w.d_dbl(jj) * w.p_dbl(m - jj);
      if (acc >= r) { j = jj; break; }
    }
    t.alpha[j] += 1;
    m -= j;
  }
  return t;
}

}  // namespace

CycleType sample_cycle_type(const WeightSystem& w, int n, Rng& rng) {
  if (n < 1 || n > w.n_max()) throw std::out_of_range("sample_cycle_type: n out of range");
  switch (w.kind()) {
    case WeightKind::uniform:
      return sample_uniform_type(n, rng);
    case WeightKind::ewens:
      return sample_ewens_feller(w, n, rng);
    default:
      return sample_scan_type(w, n, rng);
  }
}

CycleType sample_snk(int k, int n, Rng& rng, long* trials) {
  if (k < 1) throw std::invalid_argument("sample_snk: k must be >= 1");
  long count = 0;
  std::vector<long> lens;
  lens.reserve(64);
  while (true) {
    ++count;
    lens.clear();
    int m = n;
    while (m > 0) {
      long j = rng.uniform_long(m);
      lens.push_back(j);
      m -= int(j);
    }
    // Pavlov check on the compact length multiset; the full alpha vector is
    // only materialized for the accepted draw
    std::sort(lens.begin(), lens.end());
    bool ok = true;
    for (size_t i = 0; i < lens.size() && ok;) {
      size_t j = i;
      while (j < lens.size() && lens[j] == lens[i]) ++j;
      if (long(j - i) % qk(k, lens[i]) != 0) ok = false;
      i = j;
    }
    if (!ok) continue;
    CycleType t;
    t.n = n;
    t.alpha.assign(n + 1, 0);
    for (long j : lens) t.alpha[j] += 1;
    if (trials) *trials = count;
    return t;
  }
}

std::vector<double> run_samples(const SampleConfig& cfg, const WeightSystem& w,
                                const std::function<double(const CycleType&)>& stat) {
  if (cfg.R < 1) throw std::invalid_argument("run_samples: R must be >= 1");
  if (cfg.snk_k > 0 && w.kind() != WeightKind::uniform)
    throw std::invalid_argument("run_samples: S_n^{(k)} sampling requires uniform weights");
  std::vector<double> out(size_t(cfg.R));
  auto worker = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      Rng rng = derive_rng(cfg.seed, std::uint64_t(i));
      CycleType t = cfg.snk_k > 0 ? sample_snk(cfg.snk_k, cfg.n, rng)
                                  : sample_cycle_type(w, cfg.n, rng);
      out[size_t(i)] = stat(t);
    }
  };
  int T = std::max(1, cfg.threads);
  if (T == 1) {
    worker(0, cfg.R);
  } else {
    std::vector<std::thread> pool;
    long chunk = (cfg.R + T - 1) / T;
    for (int t = 0; t < T; ++t) {
      long lo = t * chunk, hi = std::min<long>(cfg.R, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
  std::sort(v_.begin(), v_.end());
}

double EmpiricalCdf::operator()(double x) const {
  return double(std::lower_bound(v_.begin(), v_.end(), x) - v_.begin()) / double(v_.size());
}

double sup_distance(const EmpiricalCdf& F, const std::function<double(double)>& G) {
  const auto& v = F.sorted();
  const double R = double(v.size());
  double worst = 0.0;
  size_t i = 0;
  while (i < v.size()) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    double g = G(v[i]);
    double below = double(i) / R;  // F(a-)
    double at = double(j) / R;     // F(a+) under the strict convention
    worst = std::max({worst, std::abs(below - g), std::abs(at - g)});
    i = j;
  }
  return worst;
}

}  // namespace permstat
