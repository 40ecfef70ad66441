#include "permstat/zeta.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace permstat {

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_zeros: cannot open " + path);
  ZeroTable t;
  std::string line;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    double v;
    try {
      v = std::stod(line.substr(first));
    } catch (...) {
      throw std::runtime_error("load_zeros: parse failure on '" + line + "'");
    }
    if (v <= 0.0) throw std::runtime_error("load_zeros: ordinates must be positive");
    if (!t.gammas.empty() && v <= t.gammas.back())
      throw std::runtime_error("load_zeros: ordinates must be strictly ascending");
    t.gammas.push_back(v);
  }
  if (t.gammas.empty()) throw std::runtime_error("load_zeros: empty zero table");
  // tables must start at the first nontrivial zero (RH-form storage contract)
  if (std::abs(t.gammas[0] - 14.134725) > 1e-4)
    throw std::runtime_error(
        "load_zeros: first ordinate must be the first zeta zero (14.134725 +- 1e-4)");
  return t;
}

namespace {

// Lanczos, g = 607/128, 15 coefficients (Godfrey's set).
const double kLanczosG = 607.0 / 128.0;
const double kLanczos[15] = {
    0.99999999999999709182,    57.156235665862923517,   -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5};

using Cplx = std::complex<double>;

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(pi z) without overflow for large |Im z|: factor out the dominant
// exponential.
Cplx log_sin_pi(Cplx z) {
  const Cplx i(0.0, 1.0);
  const Cplx log_2i = Cplx(M_LN2, M_PI_2);
  if (z.imag() >= 0.0) {
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
    return -i * M_PI * z + std::log(1.0 - std::exp(2.0 * i * M_PI * z)) - log_2i +
           Cplx(0.0, M_PI);  // the factor -1 = e^{i pi}
  }
  // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2i)
  return i * M_PI * z + std::log(1.0 - std::exp(-2.0 * i * M_PI * z)) - log_2i;
}

Cplx lgamma_core(Cplx z) {
  // valid for Re z >= 0.5
  Cplx a = kLanczos[0];
  for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z - 1.0 + double(k));
  Cplx t = z - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

std::complex<double> complex_lgamma(std::complex<double> z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("complex_lgamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return lgamma_core(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
  return std::log(M_PI) - log_sin_pi(z) - lgamma_core(1.0 - z);
}

std::complex<double> complex_gamma(std::complex<double> z) {
  return std::exp(complex_lgamma(z));
}

double zero_sum(double x, const ZeroTable& t, size_t count) {
  if (!(x > 1.0)) throw std::domain_error("zero_sum: requires x > 1 (x = log n domain)");
  if (count > t.count()) throw std::out_of_range("zero_sum: count exceeds table size");
  const double lx = std::log(x);
  double s = 0.0;
  for (size_t i = 0; i < count; ++i) {
    Cplx rho(0.5, t.gammas[i]);
    Cplx term = std::exp(complex_lgamma(-rho) + rho * lx);
    s += 2.0 * term.real();
  }
  return s;
}

double asym_mean_logO(MeanOrderVariant v, double n, const ZeroTable& t, size_t count,
                      int k) {
  if (!(std::log(n) > 1.0))
    throw std::domain_error("asym_mean_logO: need n > e (so that loglog n > 0)");
  const double ln = std::log(n);
  const double lln = std::log(ln);
  switch (v) {
    case MeanOrderVariant::uniform:
    case MeanOrderVariant::fq:
      return 0.5 * ln * ln - ln * (lln - 1.0) + zero_sum(ln, t, count);
    case MeanOrderVariant::snk: {
      if (k < 2) throw std::invalid_argument("asym_mean_logO: snk needs k >= 2");
      double g0 = 0.0;
      {
        long phi = k, m = k;
        for (long p = 2; p * p <= m; ++p)
          if (m % p == 0) {
            phi -= phi / p;
            while (m % p == 0) m /= p;
          }
        if (m > 1) phi -= phi / m;
        g0 = double(phi) / double(k);
      }
      return 0.5 * g0 * ln * ln - g0 * ln * (lln + constant_Ck(k)) +
             zero_sum(g0 * ln, t, count);
    }
  }
  throw std::logic_error("asym_mean_logO: bad variant");
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

long euler_phi_long(long n) {
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

double constant_C0(int k) {
  if (k < 1) throw std::invalid_argument("constant_C0: k must be >= 1");
  if (k == 1) return 0.0;  // gamma0 = 1, integrand vanishes
  const double g0 = double(euler_phi_long(k)) / double(k);
  // left half [0, 1/2]: removable singularity at 0 handled by expm1/log1p
  auto left = [&](double y) {
    if (y == 0.0) return -(g0 - 1.0);
    return std::expm1((g0 - 1.0) * std::log1p(-y)) / y;
  };
  double i1 = integrate(left, 0.0, 0.5, 2.5e-13);
  // right half via u = (1-y)^{g0}: integrand (1/g0)(1 - u^{1/g0-1})/(1 - u^{1/g0})
  const double a = 1.0 / g0 - 1.0, b = 1.0 / g0;
  auto right = [&](double u) {
    if (u == 0.0) return 1.0 / g0;
    return (1.0 - std::pow(u, a)) / (g0 * (1.0 - std::pow(u, b)));
  };
  double i2 = integrate(right, 0.0, std::pow(0.5, g0), 2.5e-13);
  return g0 * (i1 + i2);
}

double constant_Ck(int k) {
  if (k < 2) throw std::invalid_argument("constant_Ck: k must be >= 2");
  const double g0 = double(euler_phi_long(k)) / double(k);
  double psum = 0.0;
  long m = k;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      psum += std::log(double(p)) / double(p - 1);
      while (m % p == 0) m /= p;
    }
  if (m > 1) psum += std::log(double(m)) / double(m - 1);
  return std::log(g0) - 1.0 - constant_C0(k) / g0 - psum;
}

}  // namespace permstat
