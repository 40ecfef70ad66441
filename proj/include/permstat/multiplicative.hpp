#ifndef PERMSTAT_MULTIPLICATIVE_HPP
#define PERMSTAT_MULTIPLICATIVE_HPP

#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/series.hpp"
#include "permstat/weights.hpp"

namespace permstat {

// Values fhat(1..n) of a multiplicative function on cycle lengths,
// 1-indexed (entry 0 unused).
using FhatC = std::vector<std::complex<double>>;
using FhatRat = std::vector<CRat>;

// M_n^d(f) = M_n / p_n with M(z) = exp{sum_j d_j fhat(j) z^j / j}.
std::complex<double> mean_value(const WeightSystem& w, const FhatC& fhat, int n);
CRat mean_value_exact(const WeightSystem& w, const FhatRat& fhat, int n);

struct MeanValueReport {
  std::complex<double> exact_mean;      // M_n/p_n
  std::complex<double> main_term;       // exp{L_n(1)}
  std::complex<double> corrected_term;  // exp{L_n(1)}(1 + sum d_j (f-1)/j (p_{n-j}/p_n - 1))
  double delta = 0.0;                   // |exact - main|
  std::optional<double> delta_bound;    // bracket of the Delta_n bound (absent if d^- = 0)
  std::optional<double> measured_c;     // delta / delta_bound
  double rho_p = 0.0;                   // (sum |f-1|^p / k)^{1/p}; max |f-1| at p = inf
  double E_u = 0.0;                     // exp{2 sum_{|f-1|>u} |f-1|/k}
  double u = 0.0;
};

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

// |fhat| <= 1 required; p > max{1, 1/d^-} for rho_p (p may be kPInf).
// u is the truncation level of the E(u) functional.
MeanValueReport mean_report(const WeightSystem& w, const FhatC& fhat, int n,
                            double p = kPInf, double u = 0.1);

// S(f;m) = sum_{k=1}^m a_k k p_{m-k}.
Rat weighted_S_exact(const WeightSystem& w, const RatSeries& a, int m);
double weighted_S_dbl(const WeightSystem& w, const DSeries& a, int m);

struct FundthmResidual {
  double lhs = 0.0;         // |sum a_k p_{n-k}/p_n - a(e^{-1/n}) - S(a;n)/(n p_n)|
  double rhs_bracket = 0.0; // bracketed sum of the bound, without the constant c
  double ratio = 0.0;       // lhs / rhs_bracket (0 when bracket is 0)
};

// Residual of the fundamental coefficient-vs-Abel estimate; the tail sum of
// the bracket runs over n < j <= order(a), so give a order >= 2n for a
// faithful tail. Requires d^- > 0.
FundthmResidual fundthm_check(const WeightSystem& w, const DSeries& a, int n);

struct VoronoiResult {
  double mean = 0.0;         // (r_0 s_n + ... + r_n s_0) / (r_0 + ... + r_n)
  double abel_proxy = 0.0;   // a(e^{-1/n}), truncated at the terms given
  double d_condition = 0.0;  // (sum r_j D_{n-j}) / (sum r_j) / n, D_m = sum k a_k
};

// Voronoi (W, r_n) mean of the series a at index n; r and a are coefficient
// vectors (index 0..>=n). Errors if sum_{j<=n} r_j <= 0.
VoronoiResult voronoi_mean(const std::vector<double>& r, const std::vector<double>& a, int n);

}  // namespace permstat

#endif
