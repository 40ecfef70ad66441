#include "permstat/additive.hpp"

#include <cmath>
#include <stdexcept>

#include "permstat/multiplicative.hpp"
#include "permstat/normal.hpp"

namespace permstat {

std::pair<Hhat, EdgeworthQuantities> normalize(const WeightSystem& w, const Hhat& hhat,
                                               int n, double p) {
  if (int(hhat.size()) < n + 1)
    throw std::invalid_argument("normalize: hhat must have entries 1..n");
  double v = 0.0;
  for (int k = 1; k <= n; ++k) v += w.d_dbl(k) * hhat[k] * hhat[k] / k;
  if (!(v > 0.0)) throw std::domain_error("normalize: zero variance functional");
  EdgeworthQuantities e;
  e.p = p;
  e.B_n = std::sqrt(v);
  Hhat ht(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) ht[k] = hhat[k] / e.B_n;

  double pn = w.p_dbl(n);
  double lp = 0.0;
  for (int k = 1; k <= n; ++k) {
    double a = std::abs(ht[k]);
    e.A_n += w.d_dbl(k) * ht[k] / k;
    e.L_n3 += a * a * a / k;
    if (p == kPInf)
      lp = std::max(lp, a);
    else
      lp += std::pow(a, p) / k;
    double ratio = w.p_dbl(n - k) / pn - 1.0;
    e.C_n += w.d_dbl(k) * ht[k] / k * ratio;
    e.Lp_n2 += ht[k] * ht[k] / k * std::abs(ratio);
  }
  e.L_np = (p == kPInf) ? lp : std::pow(lp, 1.0 / p);

  if (w.kind() == WeightKind::uniform) {
    // D_n = sum_{k,l<=n, k+l>n} ht(k)ht(l)/(kl) via suffix sums of ht(l)/l
    std::vector<double> suffix(n + 2, 0.0);
    for (int l = n; l >= 1; --l) suffix[l] = suffix[l + 1] + ht[l] / l;
    double dn = 0.0;
    for (int k = 1; k <= n; ++k) {
      int lmin = n - k + 1;
      if (lmin < 1) lmin = 1;
      dn += ht[k] / k * suffix[lmin];
    }
    e.D_n = dn;
  }
  return {ht, e};
}

std::complex<double> char_fn(const WeightSystem& w, const Hhat& hhat, int n, double t) {
  if (int(hhat.size()) < n + 1)
    throw std::invalid_argument("char_fn: hhat must have entries 1..n");
  FhatC f(n + 1);
  for (int k = 1; k <= n; ++k) f[k] = std::polar(1.0, t * hhat[k]);
  return mean_value(w, f, n);
}

double edgeworth_cdf(const EdgeworthQuantities& e, double x) {
  return norm_cdf(x) - e.C_n * norm_pdf(x);
}

double frac_j_sqrt2(long j) {
  if (j < 1 || j > 10000000L)
    throw std::domain_error("frac_j_sqrt2: j must be in 1..10^7 (fixed-point precision guard)");
  // frac(j*sqrt2) = frac(j * f) with f = sqrt(2)-1 as a 128-bit binary
  // fraction 0x6A09E667F3BCC908.B2FB1366EA957D3E / 2^128
  const unsigned __int128 F =
      ((unsigned __int128)0x6A09E667F3BCC908ULL << 64) | 0xB2FB1366EA957D3EULL;
  const unsigned __int128 lo64 = F & 0xFFFFFFFFFFFFFFFFULL;
  const unsigned __int128 hi64 = F >> 64;
  unsigned __int128 J = (unsigned __int128)(unsigned long)j;
  // j*F = j*hi64*2^64 + j*lo64; keep the fractional 128 bits mod 2^128
  unsigned __int128 prod_lo = J * lo64;
  unsigned __int128 prod_hi = J * hi64;  // contributes (prod_hi mod 2^64) << 64
  unsigned __int128 frac = prod_lo + ((prod_hi & 0xFFFFFFFFFFFFFFFFULL) << 64);
  // top 64 bits of the 128-bit fraction give ~19 exact decimals
  return double(uint64_t(frac >> 64)) * 0x1p-64 + double(uint64_t(frac)) * 0x1p-128;
}

Hhat babu_manstavicius(int n) {
  if (n < 2) throw std::invalid_argument("babu_manstavicius: n must be >= 2");
  Hhat h(n + 1, 0.0);
  for (long j = 1; j <= n; ++j) {
    if (j == 1) continue;  // log 1 = 0 truncates everything
    double q = norm_quantile(frac_j_sqrt2(j));
    if (std::abs(q) <= std::log(double(j)))
      h[j] = q * std::sqrt(double(j) / n);
  }
  return h;
}

}  // namespace permstat
