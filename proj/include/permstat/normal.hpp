#ifndef PERMSTAT_NORMAL_HPP
#define PERMSTAT_NORMAL_HPP

namespace permstat {

// Standard normal CDF, density, and quantile. The quantile is Wichura's
// PPND16 rational approximation (AS 241), |error| well below 1e-10.
double norm_cdf(double x);
double norm_pdf(double x);
double norm_quantile(double p);

}  // namespace permstat

#endif
