#include "permstat/fqpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace permstat {

namespace {

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

bool is_prime(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

Int ipow(long q, int e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)q, (unsigned long)e);
  return r;
}

using Poly = std::vector<uint8_t>;  // coefficients low->high over F_q

// remainder of a (degree da) divided by monic b, in place on a copy
bool divides(const Poly& b, Poly a, long q) {
  int db = int(b.size()) - 1;
  for (int i = int(a.size()) - 1; i >= db; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      int v = a[i - db + j] - c * b[j] % int(q);
      a[i - db + j] = uint8_t(((v % int(q)) + int(q)) % int(q));
    }
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0) return false;
  return true;
}

Poly quotient(const Poly& b, const Poly& a, long q) {
  Poly r = a;
  int db = int(b.size()) - 1;
  int da = int(a.size()) - 1;
  Poly quo(size_t(da - db + 1), 0);
  for (int i = da; i >= db; --i) {
    int c = r[i];
    if (c == 0) continue;
    quo[i - db] = uint8_t(c);
    for (int j = 0; j <= db; ++j) {
      int v = r[i - db + j] - c * b[j] % int(q);
      r[i - db + j] = uint8_t(((v % int(q)) + int(q)) % int(q));
    }
  }
  return quo;
}

Poly poly_from_index(long idx, int deg, long q) {
  Poly p(size_t(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    p[i] = uint8_t(idx % q);
    idx /= q;
  }
  p[deg] = 1;  // monic
  return p;
}

}  // namespace

Int count_irreducible(long q, int n) {
  if (q < 2 || n < 1) throw std::invalid_argument("count_irreducible: q >= 2, n >= 1");
  Int s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    s += mu * ipow(q, n / d);
  }
  return s / n;
}

FqSpec make_fq_spec(long q, int n) {
  FqSpec s;
  s.q = q;
  s.n = n;
  s.I.assign(n + 1, Int(0));
  s.A.assign(n + 1, 0.0);
  for (int m = 1; m <= n; ++m) {
    s.I[m] = count_irreducible(q, m);
    // A_m = (m I_m - q^m) / q^{m/2}
    Int num = m * s.I[m] - ipow(q, m);
    s.A[m] = num.get_d() / std::pow(double(q), 0.5 * m);
  }
  return s;
}

Rat mean_xi(long q, int n, int k) {
  if (k < 1 || n < 1) throw std::invalid_argument("mean_xi: n, k must be >= 1");
  if (k > n) return Rat(0);
  Rat s(0);
  Int qk = ipow(q, k);
  Rat base = Rat(count_irreducible(q, k)) / Rat(qk);
  Rat geom(1);
  for (int j = 1; k * j <= n; ++j) {
    s += geom;
    geom /= Rat(qk);
  }
  return base * s;
}

FqBrute::FqBrute(long q, int n) : q_(q), n_(n) {
  if (!is_prime(q)) throw std::invalid_argument("FqBrute: q must be prime");
  if (n < 1) throw std::invalid_argument("FqBrute: n must be >= 1");
  double total = std::pow(double(q), n);
  if (total > 1e7) throw std::invalid_argument("FqBrute: q^n > 10^7 size guard");

  // sieve irreducibles by degree: monic poly of degree d is irreducible iff
  // no irreducible of degree <= d/2 divides it
  irr_.assign(n + 1, {});
  for (int d = 1; d <= n; ++d) {
    long cnt = 1;
    for (int i = 0; i < d; ++i) cnt *= q;
    for (long idx = 0; idx < cnt; ++idx) {
      Poly p = poly_from_index(idx, d, q);
      bool red = false;
      for (int e = 1; !red && 2 * e <= d; ++e)
        for (const Poly& g : irr_[e])
          if (divides(g, p, q)) { red = true; break; }
      if (!red) irr_[d].push_back(p);
    }
  }

  long cnt = 1;
  for (int i = 0; i < n; ++i) cnt *= q;
  xis_.reserve(size_t(cnt));
  for (long idx = 0; idx < cnt; ++idx) {
    Poly p = poly_from_index(idx, n, q);
    std::vector<int> xi(n + 1, 0);
    // trial division, smallest degrees first; once 2d exceeds the remaining
    // degree the remainder is irreducible
    for (int d = 1; 2 * d <= int(p.size()) - 1; ++d) {
      for (const Poly& g : irr_[d]) {
        while (int(p.size()) - 1 >= d && divides(g, p, q)) {
          p = quotient(g, p, q);
          xi[d] += 1;
        }
        if (2 * d > int(p.size()) - 1) break;
      }
    }
    if (int(p.size()) - 1 >= 1) xi[int(p.size()) - 1] += 1;  // irreducible remainder
    xis_.push_back(std::move(xi));
  }
}

Int FqBrute::count_irreducible_brute(int d) const {
  if (d < 1 || d > n_) throw std::out_of_range("count_irreducible_brute: degree out of range");
  return Int(long(irr_[d].size()));
}

std::map<Rat, Rat> FqBrute::distribution(
    const std::function<Rat(const std::vector<int>&)>& f) const {
  std::map<Rat, Rat> acc;
  Rat each(1, long(xis_.size()));
  for (const auto& xi : xis_) acc[f(xi)] += each;
  return acc;
}

Rat FqBrute::mean(const std::function<Rat(const std::vector<int>&)>& f) const {
  Rat s(0);
  for (const auto& xi : xis_) s += f(xi);
  return s / long(xis_.size());
}

double FqBrute::mean_dbl(const std::function<double(const std::vector<int>&)>& f) const {
  double s = 0.0;
  for (const auto& xi : xis_) s += f(xi);
  return s / double(xis_.size());
}

std::complex<double> FqBrute::mean_cplx(
    const std::function<std::complex<double>(const std::vector<int>&)>& f) const {
  std::complex<double> s = 0.0;
  for (const auto& xi : xis_) s += f(xi);
  return s / double(xis_.size());
}

namespace {

// I_m / q^e as a double via the Moebius sum in log space; e >= m so every
// term exponent m/d - e <= 0 and nothing overflows.
double I_over_qe(long q, int m, int e) {
  double lq = std::log(double(q));
  double s = 0.0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    s += mu * std::exp((double(m) / d - double(e)) * lq);
  }
  return s / m;
}

// A_m / q^{m/2} / m ... actually A_m q^{-h} with A_m = sum_{d|m,d>1} mu(d) q^{m/d - m/2}
double A_times_qpow(long q, int m, double extra_exp) {
  double lq = std::log(double(q));
  double s = 0.0;
  for (int d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    s += mu * std::exp((double(m) / d - 0.5 * m + extra_exp) * lq);
  }
  return s;
}

}  // namespace

DSeries Fk_series(long q, int k, size_t N) {
  if (k < 2) throw std::invalid_argument("Fk_series: k must be >= 2");
  if (N > 2000) throw std::invalid_argument("Fk_series: N > 2000");
  DSeries F(N);
  for (int m = k; size_t(m) <= N; m += k) {
    // I_m [log(1-(z/q)^m) + (z/q)^m] = -I_m sum_{j>=2} (z/q)^{mj}/j
    for (int j = 2; size_t(m) * j <= N; ++j)
      F.at(size_t(m) * j) -= I_over_qe(q, m, m * j) / j;
    // -(A_m / (m q^{m/2})) z^m
    F.at(size_t(m)) -= A_times_qpow(q, m, -0.5 * m) / m;
  }
  return F;
}

double prob_Dnk_zero_fq(long q, long n, int k) {
  if (k < 2) throw std::invalid_argument("prob_Dnk_zero_fq: k must be >= 2");
  if (n < 0 || n > 2000) throw std::invalid_argument("prob_Dnk_zero_fq: need 0 <= n <= 2000");
  if (k > n) return 1.0;
  size_t N = size_t(n);
  DSeries b = series_binom<double>(k, 1.0 / double(k), N);
  DSeries prod = series_mul(b, series_exp(Fk_series(q, k, N)));
  return series_prefix(prod).at(N);
}

std::complex<double> char_fn_fq(long q, int n, const std::vector<double>& a, double t) {
  if (int(a.size()) < n + 1)
    throw std::invalid_argument("char_fn_fq: a must have entries 1..n");
  if (n < 1 || n > 2000) throw std::invalid_argument("char_fn_fq: need 1 <= n <= 2000");
  // L(z) = sum_k I_k sum_{j: kj<=n} e^{i t a_k j} (z/q)^{kj} / j, then exp
  size_t N = size_t(n);
  CSeries L(N);
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; size_t(k) * j <= N; ++j) {
      double mag = I_over_qe(q, k, k * j);
      L.at(size_t(k) * j) += mag * std::polar(1.0, t * a[k] * j) / double(j);
    }
  }
  return series_exp(L).at(N);
}

std::complex<double> char_fn_sn(int n, const std::vector<double>& a, double t) {
  if (int(a.size()) < n + 1)
    throw std::invalid_argument("char_fn_sn: a must have entries 1..n");
  size_t N = size_t(n);
  CSeries L(N);
  for (int k = 1; k <= n; ++k) L.at(size_t(k)) = std::polar(1.0, t * a[k]) / double(k);
  return series_exp(L).at(N);
}

}  // namespace permstat
