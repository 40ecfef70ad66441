#ifndef PERMSTAT_SERIES_HPP
#define PERMSTAT_SERIES_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

namespace detail {

// Neumaier-compensated accumulator for float scalars; exact scalars do not
// need one. Convolutions switch to the compensated path for sums of >= 1000
// terms.
template <class R>
struct PlainAcc {
  R s{};
  void add(const R& x) { s += x; }
  R value() const { return s; }
};

struct NeumaierAcc {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

struct NeumaierAccC {
  NeumaierAcc re, im;
  void add(const std::complex<double>& x) {
    re.add(x.real());
    im.add(x.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

template <class R>
struct AccFor {
  using type = PlainAcc<R>;
};
template <>
struct AccFor<double> {
  using type = NeumaierAcc;
};
template <>
struct AccFor<std::complex<double>> {
  using type = NeumaierAccC;
};

inline constexpr size_t kCompensateThreshold = 1000;

template <class R>
R div_by_long(const R& x, long n) {
  return x / R(n);
}
inline double div_by_long(const double& x, long n) { return x / n; }
inline std::complex<double> div_by_long(const std::complex<double>& x, long n) {
  return x / double(n);
}
inline CRat div_by_long(const CRat& x, long n) {
  return CRat(x.re / n, x.im / n);
}

}  // namespace detail

// Truncated formal power series over scalar ring R; the truncation order N is
// fixed at construction and every operation checks it. The coefficient ring
// is a compile-time choice: exact (Rat, CRat) or float (double,
// complex<double>).
template <class R>
class Series {
 public:
  explicit Series(size_t order) : c_(order + 1, R{}) {}
  Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficients");
  }

  size_t order() const { return c_.size() - 1; }

  const R& at(size_t i) const {
    if (i >= c_.size())
      throw std::out_of_range("Series: coefficient index beyond truncation order");
    return c_[i];
  }
  R& at(size_t i) {
    if (i >= c_.size())
      throw std::out_of_range("Series: coefficient index beyond truncation order");
    return c_[i];
  }
  const std::vector<R>& coeffs() const { return c_; }

  Series& operator+=(const Series& o) {
    check_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  Series scaled(const R& f) const {
    Series r(*this);
    for (auto& x : r.c_) x = x * f;
    return r;
  }

  void check_order(const Series& o) const {
    if (o.c_.size() != c_.size())
      throw std::invalid_argument("Series: truncation order mismatch");
  }

 private:
  std::vector<R> c_;
};

using RatSeries = Series<Rat>;
using CRatSeries = Series<CRat>;
using DSeries = Series<double>;
using CSeries = Series<std::complex<double>>;

// Cauchy product truncated at the common order. Direct O(N^2); the workloads
// are N <= ~10^4 and exact coefficients rule out FFT anyway.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
  a.check_order(b);
  const size_t N = a.order();
  Series<R> out(N);
  const bool comp = N + 1 >= detail::kCompensateThreshold;
  for (size_t n = 0; n <= N; ++n) {
    if (comp) {
      typename detail::AccFor<R>::type acc;
      for (size_t k = 0; k <= n; ++k) acc.add(a.at(k) * b.at(n - k));
      out.at(n) = acc.value();
    } else {
      R s{};
      for (size_t k = 0; k <= n; ++k) s += a.at(k) * b.at(n - k);
      out.at(n) = s;
    }
  }
  return out;
}

// F = exp(L) via n F_n = sum_{k=1}^n k L_k F_{n-k}; requires L_0 = 0.
template <class R>
Series<R> series_exp(const Series<R>& L) {
  if (!(L.at(0) == R{}))
    throw std::invalid_argument("series_exp: constant term must vanish");
  const size_t N = L.order();
  Series<R> F(N);
  F.at(0) = R(1);
  const bool comp = N + 1 >= detail::kCompensateThreshold;
  for (size_t n = 1; n <= N; ++n) {
    if (comp) {
      typename detail::AccFor<R>::type acc;
      for (size_t k = 1; k <= n; ++k) acc.add((L.at(k) * R(long(k))) * F.at(n - k));
      F.at(n) = detail::div_by_long(acc.value(), long(n));
    } else {
      R s{};
      for (size_t k = 1; k <= n; ++k) s += (L.at(k) * R(long(k))) * F.at(n - k);
      F.at(n) = detail::div_by_long(s, long(n));
    }
  }
  return F;
}

// Inverse of exp: L with exp(L) = F, requires F_0 = 1.
template <class R>
Series<R> series_log(const Series<R>& F) {
  if (!(F.at(0) == R(1)))
    throw std::invalid_argument("series_log: constant term must be 1");
  const size_t N = F.order();
  Series<R> L(N);
  for (size_t n = 1; n <= N; ++n) {
    R s = F.at(n) * R(long(n));
    for (size_t k = 1; k < n; ++k) s -= (L.at(k) * R(long(k))) * F.at(n - k);
    L.at(n) = detail::div_by_long(s, long(n));
  }
  return L;
}

// Reciprocal series: requires a_0 != 0.
template <class R>
Series<R> series_inv(const Series<R>& a) {
  if (a.at(0) == R{})
    throw std::domain_error("series_inv: constant term vanishes");
  const size_t N = a.order();
  Series<R> b(N);
  b.at(0) = R(1) / a.at(0);
  for (size_t n = 1; n <= N; ++n) {
    R s{};
    for (size_t k = 1; k <= n; ++k) s += a.at(k) * b.at(n - k);
    b.at(n) = R{} - s / a.at(0);
  }
  return b;
}

// (1 - z^k)^v: coefficient at z^{km} is (-1)^m binom(v, m), zero elsewhere.
template <class R>
Series<R> series_binom(long k, const R& v, size_t N) {
  if (k < 1) throw std::invalid_argument("series_binom: k must be >= 1");
  Series<R> out(N);
  out.at(0) = R(1);
  R term(1);  // binom(v, m) built multiplicatively
  long sign = 1;
  for (size_t m = 1; m * size_t(k) <= N; ++m) {
    R factor = v - R(long(m) - 1);
    R prod = term * factor;
    term = detail::div_by_long(prod, long(m));
    sign = -sign;
    out.at(m * size_t(k)) = term * R(sign);
  }
  return out;
}

// Multiplication by 1/(1-z): running prefix sums.
template <class R>
Series<R> series_prefix(const Series<R>& a) {
  const size_t N = a.order();
  Series<R> out(N);
  const bool comp = N + 1 >= detail::kCompensateThreshold;
  if (comp) {
    typename detail::AccFor<R>::type acc;
    for (size_t n = 0; n <= N; ++n) {
      acc.add(a.at(n));
      out.at(n) = acc.value();
    }
  } else {
    R s{};
    for (size_t n = 0; n <= N; ++n) {
      s += a.at(n);
      out.at(n) = s;
    }
  }
  return out;
}

// z a'(z): coefficient n becomes n*a_n.
template <class R>
Series<R> series_zderiv(const Series<R>& a) {
  Series<R> out(a.order());
  for (size_t n = 0; n <= a.order(); ++n) out.at(n) = a.at(n) * R(long(n));
  return out;
}

}  // namespace permstat

#endif
