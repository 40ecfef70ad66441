#ifndef PERMSTAT_ZETA_HPP
#define PERMSTAT_ZETA_HPP

#include <complex>
#include <string>
#include <vector>

namespace permstat {

// Ordered positive imaginary parts of nontrivial zeta zeros (RH-form storage
// rho = 1/2 + i gamma). The artifact consumes published lists; it does not
// compute zeros.
struct ZeroTable {
  std::vector<double> gammas;
  size_t count() const { return gammas.size(); }
};

// Plain text, one ordinate per line, ascending, '#' comments allowed.
ZeroTable load_zeros(const std::string& path);

// Principal-branch complex log-gamma / gamma. Lanczos (g = 607/128, 15
// coefficients) with reflection for Re z < 1/2, all in log space so large
// |Im z| underflows gracefully instead of overflowing sin(pi z).
std::complex<double> complex_lgamma(std::complex<double> z);
std::complex<double> complex_gamma(std::complex<double> z);

// 2 Re sum_{i<count} Gamma(-(1/2 + i gamma_i)) x^{1/2 + i gamma_i}
// (conjugate pairing of the zeros). Requires x > 1.
double zero_sum(double x, const ZeroTable& t, size_t count);

enum class MeanOrderVariant { uniform, fq, snk };

// Asymptotic mean of log O_n:
//   uniform/fq: (1/2)log^2 n - log n (loglog n - 1) + sum_rho (log n)^rho Gamma(-rho)
//   snk:        (g0/2)log^2 n - g0 log n (loglog n + C(k))
//               + sum_rho Gamma(-rho) (g0 log n)^rho,  g0 = phi(k)/k
double asym_mean_logO(MeanOrderVariant v, double n, const ZeroTable& t, size_t count,
                      int k = 2);

// C0 = gamma0 int_0^1 ((1-y)^{gamma0-1} - 1)/y dy, adaptive quadrature to
// ~1e-12 (substitution u = (1-y)^{gamma0} at the integrable y=1 endpoint).
double constant_C0(int k);

// C(k) = log gamma0 - 1 - C0/gamma0 - sum_{p|k} log p/(p-1).
double constant_Ck(int k);

}  // namespace permstat

#endif
