#ifndef PERMSTAT_ADDITIVE_HPP
#define PERMSTAT_ADDITIVE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "permstat/weights.hpp"

namespace permstat {

// Values hhat(1..n) of a real additive function on cycle lengths, 1-indexed.
using Hhat = std::vector<double>;

struct EdgeworthQuantities {
  double B_n = 0.0;    // normalization scale sqrt(sum d_k hhat^2 / k)
  double A_n = 0.0;    // centering sum d_k htilde / k
  double C_n = 0.0;    // sum d_j htilde/j (p_{n-j}/p_n - 1)
  double L_n3 = 0.0;   // sum |htilde|^3 / k
  double L_np = 0.0;   // sum |htilde|^p / k (max |htilde| when p = inf)
  double Lp_n2 = 0.0;  // sum htilde^2/j |p_{n-j}/p_n - 1|
  double p = 0.0;
  std::optional<double> D_n;  // uniform-only cross term sum_{k+l>n} htilde(k)htilde(l)/(kl)
};

// Scales hhat to htilde = hhat/B_n satisfying sum d_k htilde^2/k = 1 and
// fills the Edgeworth/Berry-Esseen quantities. p = inf is allowed.
std::pair<Hhat, EdgeworthQuantities> normalize(const WeightSystem& w, const Hhat& hhat,
                                               int n, double p = 4.0);

// Characteristic function g_n(t) = weighted mean of the multiplicative
// function fhat(k) = e^{i t hhat(k)}.
std::complex<double> char_fn(const WeightSystem& w, const Hhat& hhat, int n, double t);

// Model CDF Phi(x) - C_n phi(x).
double edgeworth_cdf(const EdgeworthQuantities& e, double x);

// Fractional part of j*sqrt(2) in 128-bit fixed point; exact to ~2^-100 for
// j <= 10^7 (the quantile downstream has unbounded derivative near 0/1).
double frac_j_sqrt2(long j);

// The special additive function hhat(j) = d(j) (j/n)^{1/2}, where
// d(j) = Phi^{-1}({j sqrt 2}) when |Phi^{-1}({j sqrt 2})| <= log j, else 0.
Hhat babu_manstavicius(int n);

}  // namespace permstat

#endif
