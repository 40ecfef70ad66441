#include "permstat/snk.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "permstat/weights.hpp"

namespace permstat {

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

long euler_phi(long n) {
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  if (m > 1) r -= r / m;
  return r;
}

}  // namespace

long qk(int k, long j) {
  if (k < 1 || j < 1) throw std::invalid_argument("qk: k, j must be >= 1");
  long q = 1;
  for (int p : prime_factors(k)) {
    if (j % p == 0) {
      long pp = 1;
      int kk = k;
      while (kk % p == 0) { kk /= p; pp *= p; }
      q *= pp;
    }
  }
  return q;
}

SnkStructure snk_structure(int k) {
  if (k < 2) throw std::invalid_argument("snk_structure: k must be >= 2 (S_n^{(1)} = S_n)");
  SnkStructure s;
  s.k = k;
  s.k0 = 1;
  for (int p : prime_factors(k)) s.k0 *= p;
  s.gamma0 = Rat(euler_phi(k), long(k));
  s.gamma0.canonicalize();
  s.gamma.assign(s.k0, Rat(0));
  s.gamma[0] = s.gamma0;
  Rat gp(0);
  for (long j = 1; j < s.k0; ++j) {
    long l = s.k0 / std::gcd(j, s.k0);
    int mu = mobius(int(l));
    Rat g = s.gamma0 * mu;
    for (int p : prime_factors(int(l))) g /= (p - 1);
    s.gamma[j] = g;
    gp = std::max(gp, std::max(g, Rat(0)));
  }
  s.gamma_prime = gp;
  s.beta = s.gamma0 - gp;
  // A_k = prod_{m|k} m^{-mu(m)/m}
  double lg = 0.0;
  for (int m = 1; m <= k; ++m)
    if (k % m == 0) {
      int mu = mobius(m);
      if (mu != 0) lg -= double(mu) / m * std::log(double(m));
    }
  s.A_k = std::exp(lg);
  // displayed beta of the mean-value theorem: phi(k)/k for prime k, the min
  // over divisors d > 1 for composite k
  if (prime_factors(k).size() == 1 && k == prime_factors(k)[0]) {
    s.beta_mean_formula = s.gamma0;
  } else {
    bool first = true;
    Rat bm(0);
    for (int d = 2; d <= k; ++d)
      if (k % d == 0) {
        Rat inner(1);
        int mu = mobius(d);
        Rat prod(1);
        for (int p : prime_factors(d)) prod /= (p - 1);
        inner -= prod * mu;
        Rat cand = s.gamma0 * inner;
        if (first || cand < bm) { bm = cand; first = false; }
      }
    s.beta_mean_formula = bm;
  }
  return s;
}

namespace {

// Multiplies acc by the factor (1 + sum_{q|s, j*s <= N} (c z^j / j)^s / s!)
// in place; the factor is sparse with terms at degrees j*s.
template <class R>
void mul_factor(Series<R>& acc, long j, long q, const R& c, size_t N) {
  std::vector<std::pair<size_t, R>> terms;  // (degree, coefficient)
  R base = detail::div_by_long(c, j);       // c/j
  R pw(1);
  R fact(1);
  for (long s = 1; size_t(j) * size_t(s) <= N; ++s) {
    pw = pw * base;
    fact = detail::div_by_long(fact, s);  // accumulates 1/s!
    if (s % q == 0) terms.emplace_back(size_t(j * s), pw * fact);
  }
  if (terms.empty()) return;
  Series<R> out = acc;
  for (auto& [deg, coef] : terms)
    for (size_t m = deg; m <= N; ++m) out.at(m) += coef * acc.at(m - deg);
  acc = out;
}

// fact bookkeeping above: after step s, fact = 1/s! and pw = (c/j)^s.

}  // namespace

RatSeries Hk_series_exact(int k, size_t N, const std::vector<Rat>& fhat) {
  if (N > 2000) throw std::invalid_argument("Hk_series_exact: N > 2000");
  RatSeries acc(N);
  acc.at(0) = 1;
  for (size_t j = 2; j <= N; ++j) {
    if (std::gcd(long(j), long(k)) == 1) continue;
    Rat c = fhat.empty() ? Rat(1) : fhat.at(j);
    mul_factor(acc, long(j), qk(k, long(j)), c, N);
  }
  return acc;
}

CSeries Hk_series_cplx(int k, size_t N, const std::vector<std::complex<double>>& fhat) {
  if (N > 2000) throw std::invalid_argument("Hk_series_cplx: N > 2000");
  CSeries acc(N);
  acc.at(0) = 1.0;
  for (size_t j = 2; j <= N; ++j) {
    if (std::gcd(long(j), long(k)) == 1) continue;
    std::complex<double> c = fhat.empty() ? 1.0 : fhat.at(j);
    mul_factor(acc, long(j), qk(k, long(j)), c, N);
  }
  return acc;
}

Rat snk_density(int k, int n) {
  if (n < 0 || n > 2000) throw std::invalid_argument("snk_density: need 0 <= n <= 2000");
  WeightSystem w = make_coprime(k, std::max(n, 1), true);
  RatSeries H = Hk_series_exact(k, size_t(n));
  Rat c(0);
  for (int j = 0; j <= n; ++j)
    if (H.at(j) != 0) c += H.at(j) * w.p(n - j);
  return c;
}

double snk_density_dbl(int k, int n) {
  WeightSystem w = make_coprime(k, std::max(n, 1), false);
  CSeries dummy(0);  // silence unused-warning free path
  (void)dummy;
  size_t N = size_t(n);
  DSeries acc(N);
  acc.at(0) = 1.0;
  for (size_t j = 2; j <= N; ++j) {
    if (std::gcd(long(j), long(k)) == 1) continue;
    mul_factor(acc, long(j), qk(k, long(j)), 1.0, N);
  }
  double c = 0.0;
  for (int j = 0; j <= n; ++j) c += acc.at(j) * w.p_dbl(n - j);
  return c;
}

double Hk_at_one(int k) {
  // log H = sum over (j,k)>1 of log(1 + sum_{q|s} 1/(j^s s!)); evaluated
  // exactly to J, then an analytic tail for the q=2 classes:
  // log factor ~ 1/(2 j^2), summed by inclusion-exclusion over the prime
  // divisors of k with an Euler-Maclaurin zeta tail. Residual O(J^{-2}).
  const long J = 1000000;
  double lg = 0.0;
  for (long j = 2; j <= J; ++j) {
    if (std::gcd(j, long(k)) == 1) continue;
    long q = qk(k, j);
    double x = 1.0 / double(j);
    double term = 0.0, pw = std::pow(x, double(q));
    double fact = 1.0;
    for (long i = 1; i <= q; ++i) fact *= double(i);
    long s = q;
    while (true) {
      double add = pw / fact;
      term += add;
      if (add < 1e-19 * (1.0 + term)) break;
      for (long step = 0; step < q; ++step) { ++s; pw *= x; fact *= double(s); }
    }
    lg += std::log1p(term);
  }
  // tail: only q=2 matters at this magnitude; those j are exactly the even
  // j when 2|k (other q>=3 classes contribute O(J^{-2}) already)
  if (k % 2 == 0) {
    // sum_{j>J, 2|j} 1/(2 j^2) restricted to j whose odd prime divisors of k
    // do not force q>2; over-inclusion only changes O(J^{-2}) terms, so take
    // all even j: (1/8) sum_{m>J/2} 1/m^2 ~ Euler-Maclaurin
    double M = double(J) / 2.0;
    double zeta_tail = 1.0 / M - 1.0 / (2.0 * M * M) + 1.0 / (6.0 * M * M * M);
    lg += 0.125 * zeta_tail;
  }
  return std::exp(lg);
}

double snk_density_asym(int k, int n) {
  SnkStructure s = snk_structure(k);
  double g0 = s.gamma0.get_d();
  return std::pow(double(n), g0 - 1.0) / std::tgamma(g0) * s.A_k * Hk_at_one(k);
}

namespace {

// 1 + sum_{s >= 1, q|s} c^s / (j^s s!), summed to convergence.
std::complex<double> h_factor_at_one(long j, long q, std::complex<double> c) {
  std::complex<double> term = 0.0;
  std::complex<double> pw = 1.0;
  double fact = 1.0;
  long s = 0;
  while (s < 4000) {
    ++s;
    pw *= c / double(j);
    fact *= double(s);
    if (s % q == 0) {
      std::complex<double> add = pw / fact;
      term += add;
      if (std::abs(add) < 1e-19 * (1.0 + std::abs(term))) break;
    }
    if (std::abs(pw) / fact < 1e-25) break;
  }
  return 1.0 + term;
}

}  // namespace

SnkMeanReport mean_mult_snk(int k, const std::vector<std::complex<double>>& fhat, int n) {
  if (n < 1 || n > 2000) throw std::invalid_argument("mean_mult_snk: need 1 <= n <= 2000");
  if (int(fhat.size()) < n + 1)
    throw std::invalid_argument("mean_mult_snk: fhat must be 1-indexed with n entries");
  // |fhat| <= 1 is assumed for the error bound of the main term; the exact
  // series value is well-defined for any fhat and is not gated on it
  const size_t N = size_t(n);
  CSeries L(N);
  for (size_t j = 1; j <= N; ++j)
    if (std::gcd(long(j), long(k)) == 1) L.at(j) = fhat[j] / double(j);
  CSeries num = series_mul(series_exp(L), Hk_series_cplx(k, N, fhat));
  double cn = snk_density_dbl(k, n);
  SnkMeanReport rep;
  rep.exact = num.at(N) / cn;

  std::complex<double> lsum = 0.0;
  for (int j = 1; j <= n; ++j)
    if (std::gcd(long(j), long(k)) == 1) lsum += (fhat[j] - 1.0) / double(j);
  std::complex<double> main = std::exp(lsum);
  for (long j = 2; j <= n; ++j) {
    if (std::gcd(j, long(k)) == 1) continue;
    long q = qk(k, j);
    main *= h_factor_at_one(j, q, fhat[j]) / h_factor_at_one(j, q, 1.0);
  }
  rep.main_term = main;
  rep.error = std::abs(rep.exact - rep.main_term);
  return rep;
}

}  // namespace permstat
