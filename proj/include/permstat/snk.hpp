#ifndef PERMSTAT_SNK_HPP
#define PERMSTAT_SNK_HPP

#include <complex>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/series.hpp"

namespace permstat {

// q_k(j) = prod_{p | gcd(k,j)} p^{l_k(p)}, the full p-parts of k over primes
// dividing gcd(k,j). A permutation is a k-th power iff q_k(j) | alpha_j for
// all j (Mineev-Pavlov).
long qk(int k, long j);

// Constants attached to S_n^{(k)}: k0 = prod_{p|k} p, the singularity
// exponents gamma_j of p(z) = prod_j (1 - z e^{-2 pi i j/k0})^{-gamma_j},
// gamma0 = phi(k)/k, gamma' = max_{j!=0} max{gamma_j, 0}, beta = gamma0 -
// gamma', and A_k = lim_{z->1} (1-z)^{gamma0} p(z) = prod_{m|k} m^{-mu(m)/m}.
struct SnkStructure {
  int k = 0;
  long k0 = 1;
  Rat gamma0;
  std::vector<Rat> gamma;  // gamma_0 .. gamma_{k0-1}
  Rat gamma_prime;
  Rat beta;
  double A_k = 1.0;
  // beta per the mean-value theorem's displayed formula,
  // min_{d|k, d>1} gamma0 (1 - mu(d) prod_{p|d} 1/(p-1)); equals gamma0 for
  // prime k.
  Rat beta_mean_formula;
};

SnkStructure snk_structure(int k);

// H_k(f; z) = prod_{(j,k)>1} (1 + sum_{q_k(j)|s} (fhat(j) z^j / j)^s / s!),
// truncated at order N (inner s runs while j*s <= N). fhat empty means
// fhat == 1.
RatSeries Hk_series_exact(int k, size_t N, const std::vector<Rat>& fhat = {});
CSeries Hk_series_cplx(int k, size_t N, const std::vector<std::complex<double>>& fhat = {});

// c_n = |S_n^{(k)}|/n! = [p(z) H_k(1;z)]_{(n)} with p(z) the coprime-weights
// generating function.
Rat snk_density(int k, int n);
double snk_density_dbl(int k, int n);

// Pavlov asymptotics c_n ~ n^{gamma0-1}/Gamma(gamma0) * A_k * H_k(1;1).
double snk_density_asym(int k, int n);

// H_k(1;1), product truncated with an analytic tail correction; absolute
// error well below 1e-8.
double Hk_at_one(int k);

struct SnkMeanReport {
  std::complex<double> exact;      // [exp{sum_{(j,k)=1} fhat_j z^j/j} H_k(f;z)]_(n) / c_n
  std::complex<double> main_term;  // exp{sum (fhat_j-1)/j} * prod of H-factor ratios
  double error = 0.0;              // |exact - main_term|
};

// Mean of a multiplicative function on S_n^{(k)} with |fhat| <= 1; fhat is
// 1-indexed with at least n entries.
SnkMeanReport mean_mult_snk(int k, const std::vector<std::complex<double>>& fhat, int n);

}  // namespace permstat

#endif
