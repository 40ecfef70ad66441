#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "permstat/multiplicative.hpp"
#include "permstat/partitions.hpp"
#include "permstat/sampler.hpp"

using namespace permstat;

namespace {

// independent oracle: iterate all n! permutations, f(sigma) = prod fhat(j)^{alpha_j}
CRat brute_mean_mult(const WeightSystem& w, const FhatRat& fhat, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  CRat num;
  Rat den(0);
  do {
    std::vector<bool> seen(n, false);
    CRat fval(Rat(1));
    Rat dval(1);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
      fval *= fhat[len];
      dval *= w.d(len);
    }
    CRat fd = fval;
    fd.re *= dval;
    fd.im *= dval;
    num += fd;
    den += dval;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return num / CRat(den);
}

FhatRat random_fhat_in_disc(int n, Rng& rng) {
  FhatRat f(n + 1);
  for (int j = 1; j <= n; ++j) {
    // rationals with |re| + |im| <= 1 (so |f| <= 1)
    Rat re = make_rat(long(rng.uniform_long(13)) - 7, 14);
    Rat im = make_rat(long(rng.uniform_long(13)) - 7, 14);
    f[j] = CRat(re, im);
  }
  return f;
}

}  // namespace

TEST_CASE("mean_value trivial and enumerated examples") {
  WeightSystem u2 = make_uniform(2);
  FhatC two(3, {2.0, 0.0});
  CHECK(mean_value(u2, two, 2).real() == doctest::Approx(3.0).epsilon(1e-14));

  WeightSystem u3 = make_uniform(3);
  for (double uu : {2.0, -1.0, 0.3}) {
    FhatC f(4, {uu, 0.0});
    double expect = (uu * uu * uu + 3 * uu * uu + 2 * uu) / 6.0;
    CHECK(mean_value(u3, f, 3).real() == doctest::Approx(expect).epsilon(1e-13));
  }

  for (auto w : {make_uniform(6), make_ewens(Rat(2), 6), make_coprime(2, 6)}) {
    FhatC ones(7, {1.0, 0.0});
    auto m = mean_value(w, ones, 6);
    CHECK(m.real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(m.imag()) < 1e-14);
  }
}

TEST_CASE("mean_value_exact equals the permutation oracle (20 random tables)") {
  Rng rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 1 + int(rng.uniform_long(5));  // 2..6
    FhatRat f = random_fhat_in_disc(n, rng);
    for (auto w : {make_uniform(n), make_ewens(Rat(2), n), make_coprime(2, n)}) {
      CRat series_route = mean_value_exact(w, f, n);
      CRat brute = brute_mean_mult(w, f, n);
      CHECK(series_route == brute);
    }
  }
}

TEST_CASE("|mean_value| <= 1 for |fhat| <= 1") {
  Rng rng(4242);
  for (int n : {50, 200, 500}) {
    for (auto w : {make_uniform(n), make_ewens(Rat(1, 2), n), make_coprime(3, n)}) {
      FhatC f(n + 1);
      for (int j = 1; j <= n; ++j)
        f[j] = std::polar(rng.uniform01(), 2 * M_PI * rng.uniform01());
      CHECK(std::abs(mean_value(w, f, n)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("mean_report: trivial fhat and the uniform-collapse of the correction") {
  WeightSystem u = make_uniform(50);
  FhatC ones(51, {1.0, 0.0});
  MeanValueReport r = mean_report(u, ones, 50);
  CHECK(std::abs(r.main_term - 1.0) < 1e-14);
  CHECK(std::abs(r.corrected_term - 1.0) < 1e-14);
  CHECK(r.delta < 1e-14);

  // uniform weights: p_{n-j}/p_n = 1, so corrected == main for any fhat
  FhatC f(51);
  Rng rng(7);
  for (int j = 1; j <= 50; ++j) f[j] = std::polar(rng.uniform01(), rng.uniform01());
  MeanValueReport r2 = mean_report(u, f, 50);
  CHECK(std::abs(r2.corrected_term - r2.main_term) < 1e-13);
  CHECK(r2.delta_bound.has_value());

  // |exp{L_n(1)}| <= 1 for fhat = e^{it hhat}
  FhatC g(51);
  for (int j = 1; j <= 50; ++j) g[j] = std::polar(1.0, 0.7 * std::log(double(j)));
  MeanValueReport r3 = mean_report(u, g, 50);
  CHECK(std::abs(r3.main_term) <= 1.0 + 1e-13);
}

TEST_CASE("mean_report preconditions") {
  WeightSystem u = make_uniform(10);
  FhatC big(11, {2.0, 0.0});
  CHECK_THROWS_AS(mean_report(u, big, 10), std::invalid_argument);
  FhatC ok(11, {1.0, 0.0});
  CHECK_THROWS_AS(mean_report(u, ok, 10, 0.5), std::invalid_argument);
  WeightSystem c = make_coprime(2, 10);
  MeanValueReport r = mean_report(c, ok, 10);  // d^- = 0: bound absent
  CHECK(!r.delta_bound.has_value());
}

TEST_CASE("weighted_S examples and the z a'(z) p(z) identity") {
  WeightSystem u = make_uniform(50);
  RatSeries e0(10);
  e0.at(0) = 5;
  for (int m = 1; m <= 10; ++m) CHECK(weighted_S_exact(u, e0, m) == 0);

  RatSeries L(2);
  L.at(1) = 1;
  RatSeries a = series_exp(L);  // [1, 1, 1/2]
  CHECK(weighted_S_exact(u, a, 2) == 2);

  // sum_m S(f;m) z^m = z a'(z) p(z), exact at N = 50
  Rng rng(31337);
  RatSeries arand(50);
  for (size_t j = 0; j <= 50; ++j)
    arand.at(j) = make_rat(long(rng.uniform_long(9)) - 5, long(rng.uniform_long(6)));
  WeightSystem e = make_ewens(Rat(3, 2), 50);
  RatSeries rhs = series_mul(series_zderiv(arand), p_series_exact(e, 50));
  for (int m = 1; m <= 50; ++m) CHECK(weighted_S_exact(e, arand, m) == rhs.at(size_t(m)));
}

TEST_CASE("fundthm_check: constant series gives zero LHS; geometric stays bounded") {
  WeightSystem u = make_uniform(400);
  DSeries cst(400);
  cst.at(0) = 3.5;
  FundthmResidual r = fundthm_check(u, cst, 100);
  CHECK(r.lhs < 1e-12);

  DSeries geo(400);
  for (size_t i = 0; i <= 400; ++i) geo.at(i) = 1.0;
  for (int n : {50, 100}) {
    FundthmResidual g = fundthm_check(u, geo, n);
    CHECK(g.rhs_bracket > 0.0);
    CHECK(std::isfinite(g.ratio));
  }

  WeightSystem c = make_coprime(2, 100);
  CHECK_THROWS_AS(fundthm_check(c, cst, 50), std::domain_error);
}

TEST_CASE("fundthm_check ratio bounded over an n-sweep for a fixed analytic series") {
  // a(z) = exp(z/2) truncated far beyond n, ewens(1/2) weights
  WeightSystem w = make_ewens(Rat(1, 2), 1600);
  DSeries a(1600);
  double term = 1.0;
  a.at(0) = 1.0;
  for (size_t j = 1; j <= 1600; ++j) {
    term *= 0.5 / double(j);
    a.at(j) = term;
  }
  double bound = 0.0;
  for (int n : {50, 100, 200, 400}) {
    FundthmResidual r = fundthm_check(w, a, n);
    CHECK(std::isfinite(r.ratio));
    bound = std::max(bound, r.ratio);
  }
  CHECK(bound < 100.0);  // recorded empirical bound; monotonicity not asserted
}

TEST_CASE("voronoi_mean: Tauber case, constants, and the Abel value of 1/(1+z)") {
  // r = e_0: classical Tauber, mean = s_n; alternating harmonic -> ln 2
  const int n = 10000;
  std::vector<double> r(n + 1, 0.0);
  r[0] = 1.0;
  std::vector<double> a(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) a[k] = ((k % 2) ? 1.0 : -1.0) / k;
  VoronoiResult v = voronoi_mean(r, a, n);
  CHECK(std::abs(v.mean - std::log(2.0)) < 1.0 / n);

  // constant series: Voronoi mean = A for every admissible r
  WeightSystem e2 = make_ewens(Rat(2), 1000);
  std::vector<double> re(1001);
  for (int i = 0; i <= 1000; ++i) re[i] = e2.p_dbl(i);
  std::vector<double> ca(1001, 0.0);
  ca[0] = -2.25;
  CHECK(voronoi_mean(re, ca, 1000).mean == doctest::Approx(-2.25).epsilon(1e-12));

  // a_k = (-1)^k with ewens(2) weights: -> 1/2; the Abel proxy needs terms
  // well beyond n before e^{-k/n} has decayed
  std::vector<double> alt(12001);
  for (int k = 0; k <= 12000; ++k) alt[k] = (k % 2) ? -1.0 : 1.0;
  VoronoiResult v2 = voronoi_mean(re, alt, 1000);
  CHECK(std::abs(v2.mean - 0.5) < 0.01);
  CHECK(std::abs(v2.abel_proxy - 0.5) < 0.01);

  std::vector<double> zeros(11, 0.0);
  CHECK_THROWS_AS(voronoi_mean(zeros, zeros, 10), std::domain_error);
}
