#ifndef PERMSTAT_FQPOLY_HPP
#define PERMSTAT_FQPOLY_HPP

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/series.hpp"

namespace permstat {

// Number of monic irreducibles of degree n over F_q:
// I_n = (1/n) sum_{d|n} mu(d) q^{n/d}, exact.
Int count_irreducible(long q, int n);

// I_n and the normalized defects A_n = (n I_n - q^n)/q^{n/2} for n = 1..n_max;
// the paper pins -2 <= A_n <= 0 and the artifact asserts it exactly.
struct FqSpec {
  long q = 2;
  int n = 0;
  std::vector<Int> I;        // 1-indexed
  std::vector<double> A;     // 1-indexed, computed from exact I_n
};
FqSpec make_fq_spec(long q, int n);

// Exact E_n xi_k = (I_k/q^k) sum_{1<=kj<=n} q^{-k(j-1)}; 0 when k > n.
Rat mean_xi(long q, int n, int k);

// Degree-multiset oracle over all q^n monic polynomials, factored by trial
// division against sieved irreducibles. Guarded at q^n <= 10^7; q prime.
class FqBrute {
 public:
  FqBrute(long q, int n);
  long q() const { return q_; }
  int n() const { return n_; }
  // distribution of a functional of xi = (xi_1..xi_n): map value -> exact prob
  std::map<Rat, Rat> distribution(const std::function<Rat(const std::vector<int>&)>& f) const;
  Rat mean(const std::function<Rat(const std::vector<int>&)>& f) const;
  double mean_dbl(const std::function<double(const std::vector<int>&)>& f) const;
  std::complex<double> mean_cplx(
      const std::function<std::complex<double>(const std::vector<int>&)>& f) const;
  Int count_irreducible_brute(int d) const;  // from the sieve, for cross-checks
 private:
  long q_;
  int n_;
  std::vector<std::vector<int>> xis_;  // xi vector of every monic polynomial
  std::vector<std::vector<std::vector<uint8_t>>> irr_;  // by degree
};

// F_k(z) = sum_{k|m} I_m [log(1-(z/q)^m) + (z/q)^m] - sum_{k|m} A_m/(m q^{m/2}) z^m,
// float coefficients (I_m q^{-e} evaluated in log space).
DSeries Fk_series(long q, int k, size_t N);

// nu_n(D_{nk} = 0) = [(1-z^k)^{1/k}/(1-z) exp{F_k(z)}]_{(n)}.
double prob_Dnk_zero_fq(long q, long n, int k);

// [prod_k (1 - (z/q)^k e^{i t a_k})^{-I_k}]_{(n)}: characteristic function of
// sum a_k xi_k. a is 1-indexed with at least n entries.
std::complex<double> char_fn_fq(long q, int n, const std::vector<double>& a, double t);

// S_n-side companion: [exp{sum_k e^{i t a_k} z^k / k}]_{(n)}.
std::complex<double> char_fn_sn(int n, const std::vector<double>& a, double t);

}  // namespace permstat

#endif
