#ifndef PERMSTAT_RATIONAL_HPP
#define PERMSTAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace permstat {

using Rat = mpq_class;
using Int = mpz_class;

// Complex number with exact rational real/imaginary parts. Closed under
// +,-,* and division by a nonzero CRat, which is all the generating-function
// machinery needs.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(const Rat& r) : re(r), im(0) {}
  CRat(long r) : re(r), im(0) {}
  CRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw std::domain_error("CRat: division by zero");
    return CRat((a.re * b.re + a.im * b.im) / n2,
                (a.im * b.re - a.re * b.im) / n2);
  }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  Rat norm2() const { return re * re + im * im; }
};

inline double to_double(const Rat& x) { return x.get_d(); }
inline std::complex<double> to_complex(const CRat& x) {
  return {x.re.get_d(), x.im.get_d()};
}

// log of a positive big integer, accurate to ~1ulp even when the value
// does not fit in a double: m*2^e with m in [0.5,1).
inline double log_mpz(const Int& v) {
  if (v <= 0) throw std::domain_error("log_mpz: nonpositive argument");
  signed long e;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * M_LN2;
}

inline double log_mpq(const Rat& v) {
  return log_mpz(v.get_num()) - log_mpz(v.get_den());
}

// mpq_class(a, b) does not canonicalize; this does.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "3", "-1/2" or a plain decimal like "0.25" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r;
    if (r.set_str(s, 10) != 0)
      throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  Int num;
  if (num.set_str(digits.empty() ? "0" : digits, 10) != 0)
    throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
  Int den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace permstat

#endif
