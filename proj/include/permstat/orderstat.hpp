#ifndef PERMSTAT_ORDERSTAT_HPP
#define PERMSTAT_ORDERSTAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

// Exact E D_{nk} on uniform S_n: (1/k) H_{[n/k]} (E alpha_j = 1/j).
Rat expected_Dnk(long n, long k);

// Exact P(D_{nk} = 0) on uniform S_n: prod_{j=1}^{[n/k]} (1 - 1/(jk)).
Rat prob_Dnk_zero(long n, long k);

// Same probability through the coefficient route [(1-z^k)^{1/k}/(1-z)]_(n),
// float series; the two routes must agree.
double prob_Dnk_zero_series(long n, long k);

// Exact rational bracket E D_{n,k} - 1 + P(D_{n,k}=0) = E (D_{n,k}-1)^+.
Rat dnk_bracket(long n, long k);

// mu_n = E(log P_n - log O_n) = sum over prime powers p^s <= n of the
// bracket times log p. Brackets with [n/p^s] <= 64 are computed in exact
// rationals (they can nearly cancel), larger ones in compensated floats.
double mu_exact(long n);

// E log P_n = sum_{j<=n} log j / j; E log O_n = E log P_n - mu_n.
double mean_logP(long n);
double mean_logO(long n);

enum class EtVariant { uniform, ewens, snk };

// Edgeworth-type model for the standardized log O_n. The correction is
// [c_skew (1 - x^2) + c_loc] e^{-x^2/2} / sqrt(log n); c_loc is the location
// part of the r_k polynomial, which belongs to the fixed (gamma0/2) log^2 n
// centering of log P_n and cancels when the variable is centered at its own
// mean, so cdf() drops it under mean centering.
struct EtModel {
  EtVariant variant = EtVariant::uniform;
  int n = 0;
  int k = 0;              // snk
  double theta = 1.0;     // ewens
  double gamma0 = 1.0;
  double C0 = 0.0;
  double centering = 0.0; // uniform: exact E log O_n; ewens: (th/2)log^2 n - th log n loglog n; snk: NaN (caller policy)
  double scale = 0.0;     // sqrt(gamma0/3) log^{3/2} n (ewens: theta/sqrt3 log^{3/2} n)
  double c_skew = 0.0;    // sqrt(3/gamma0)/(8 sqrt(2pi)); 0 for ewens
  double c_loc = 0.0;     // -sqrt(3/gamma0) C0 / sqrt(2pi)

  double rk(double x) const;  // the paper's polynomial: c_skew (1-x^2) + c_loc
  double cdf(double x, bool mean_centered) const;
};

EtModel et_model(EtVariant variant, int n, int k = 2, double theta = 1.0);

struct EtReport {
  EtVariant variant;
  int n = 0;
  long R = 0;
  std::uint64_t seed = 0;
  std::string centering_used;  // "exact-mean" or "sample-mean"
  double centering_value = 0.0;
  double model_scale = 0.0;    // the theorem's sqrt(gamma0/3) log^{3/2} n
  double scale_used = 0.0;     // sample standard deviation
  double sup_vs_Phi = 0.0;
  double sup_vs_model = 0.0;
};

// Monte Carlo sup-distance experiment for log O_n. Centering: exact
// E log O_n for uniform, sample mean for snk/ewens. Scale: the sample
// standard deviation; the asymptotic scale is off by a factor
// (1 + O(1/log n)) with a large constant (the sum_{k+l>n} covariance term
// costs ~ (pi^2/6) log^2 n of variance), which at desk-scale n would swamp
// the shape comparison the experiment is after. Both scales are reported.
EtReport et_experiment(EtVariant variant, int n, long R, std::uint64_t seed,
                       int k = 2, double theta = 1.0, int threads = 1);

}  // namespace permstat

#endif
