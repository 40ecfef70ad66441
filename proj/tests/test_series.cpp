#include <doctest.h>

#include <complex>

#include "permstat/sampler.hpp"
#include "permstat/series.hpp"

using namespace permstat;

namespace {

RatSeries from_longs(std::initializer_list<long> v) {
  std::vector<Rat> c;
  for (long x : v) c.emplace_back(x);
  return RatSeries(c);
}

// small random rationals with a reproducible stream
RatSeries random_L(size_t N, Rng& rng) {
  RatSeries L(N);
  for (size_t j = 1; j <= N; ++j)
    L.at(j) = make_rat(long(rng.uniform_long(19)) - 10, long(rng.uniform_long(9)));
  return L;
}

}  // namespace

TEST_CASE("series_mul basics") {
  RatSeries a = from_longs({1, 1, 0});   // 1+z
  RatSeries b = from_longs({1, -1, 0});  // 1-z
  RatSeries c = series_mul(a, b);
  CHECK(c.at(0) == 1);
  CHECK(c.at(1) == 0);
  CHECK(c.at(2) == -1);

  // 1/(1-z) * (1-z) at N=5
  RatSeries ones(5);
  for (size_t i = 0; i <= 5; ++i) ones.at(i) = 1;
  RatSeries onemz(5);
  onemz.at(0) = 1;
  onemz.at(1) = -1;
  RatSeries id = series_mul(ones, onemz);
  CHECK(id.at(0) == 1);
  for (size_t i = 1; i <= 5; ++i) CHECK(id.at(i) == 0);
}

TEST_CASE("exp(z)*exp(z) = exp(2z) exactly at N=10") {
  const size_t N = 10;
  RatSeries L(N);
  L.at(1) = 1;
  RatSeries e = series_exp(L);
  RatSeries e2 = series_mul(e, e);
  Rat fact(1), pow2(1);
  for (size_t n = 0; n <= N; ++n) {
    if (n > 0) { fact *= long(n); pow2 *= 2; }
    CHECK(e2.at(n) == pow2 / fact);
  }
}

TEST_CASE("series_exp examples") {
  // L = sum z^j/j -> geometric series
  RatSeries L(6);
  for (size_t j = 1; j <= 6; ++j) L.at(j) = Rat(1, long(j));
  RatSeries F = series_exp(L);
  for (size_t i = 0; i <= 6; ++i) CHECK(F.at(i) == 1);

  // L = 0 -> identity
  RatSeries Z(4);
  RatSeries E = series_exp(Z);
  CHECK(E.at(0) == 1);
  for (size_t i = 1; i <= 4; ++i) CHECK(E.at(i) == 0);

  // L = z + z^3/3 at N=4 (coprime-to-2 weights)
  RatSeries L2(4);
  L2.at(1) = 1;
  L2.at(3) = Rat(1, 3);
  RatSeries F2 = series_exp(L2);
  CHECK(F2.at(0) == 1);
  CHECK(F2.at(1) == 1);
  CHECK(F2.at(2) == Rat(1, 2));
  CHECK(F2.at(3) == Rat(1, 2));
  CHECK(F2.at(4) == Rat(3, 8));

  // constant term must vanish
  RatSeries bad = from_longs({1, 0});
  CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("series_inv examples") {
  RatSeries onemz(3);
  onemz.at(0) = 1;
  onemz.at(1) = -1;
  RatSeries g = series_inv(onemz);
  for (size_t i = 0; i <= 3; ++i) CHECK(g.at(i) == 1);

  // inv(exp z) = exp(-z) at N=8
  RatSeries L(8);
  L.at(1) = 1;
  RatSeries e = series_exp(L);
  RatSeries ie = series_inv(e);
  Rat fact(1);
  long sign = 1;
  for (size_t n = 0; n <= 8; ++n) {
    if (n > 0) { fact *= long(n); sign = -sign; }
    CHECK(ie.at(n) == Rat(sign) / fact);
  }

  RatSeries c = from_longs({2, 0, 0});
  RatSeries ic = series_inv(c);
  CHECK(ic.at(0) == Rat(1, 2));
  CHECK(ic.at(1) == 0);
  CHECK(ic.at(2) == 0);

  RatSeries z0 = from_longs({0, 1});
  CHECK_THROWS_AS(series_inv(z0), std::domain_error);
}

TEST_CASE("series_binom examples") {
  RatSeries b1 = series_binom<Rat>(1, Rat(-1), 5);
  for (size_t i = 0; i <= 5; ++i) CHECK(b1.at(i) == 1);

  RatSeries b2 = series_binom<Rat>(2, Rat(1, 2), 4);
  CHECK(b2.at(0) == 1);
  CHECK(b2.at(1) == 0);
  CHECK(b2.at(2) == Rat(-1, 2));
  CHECK(b2.at(3) == 0);
  CHECK(b2.at(4) == Rat(-1, 8));

  RatSeries b3 = series_binom<Rat>(3, Rat(1, 3), 3);
  CHECK(b3.at(0) == 1);
  CHECK(b3.at(1) == 0);
  CHECK(b3.at(2) == 0);
  CHECK(b3.at(3) == Rat(-1, 3));
}

TEST_CASE("order mismatch and out-of-range access are errors") {
  RatSeries a(3), b(4);
  CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(a.at(4), std::out_of_range);
}

TEST_CASE("exp/log round trip is exact for random rational L up to N=64") {
  Rng rng(12345);
  for (int rep = 0; rep < 5; ++rep) {
    size_t N = 16 * (rep + 1) > 64 ? 64 : 16 * (rep + 1);
    RatSeries L = random_L(N, rng);
    RatSeries back = series_log(series_exp(L));
    for (size_t i = 0; i <= N; ++i) CHECK(back.at(i) == L.at(i));
  }
}

TEST_CASE("exp(L1+L2) = exp(L1) exp(L2) exactly") {
  Rng rng(777);
  const size_t N = 24;
  RatSeries L1 = random_L(N, rng), L2 = random_L(N, rng);
  RatSeries lhs = series_exp(L1 + L2);
  RatSeries rhs = series_mul(series_exp(L1), series_exp(L2));
  for (size_t i = 0; i <= N; ++i) CHECK(lhs.at(i) == rhs.at(i));
}

TEST_CASE("float mode tracks exact mode to relative 1e-10 at N=2000") {
  const size_t N = 2000;
  // the coprime-to-2 generating function, a representative workload
  RatSeries L(N);
  DSeries Ld(N);
  for (size_t j = 1; j <= N; j += 2) {
    L.at(j) = Rat(1, long(j));
    Ld.at(j) = 1.0 / double(j);
  }
  RatSeries F = series_exp(L);
  DSeries Fd = series_exp(Ld);
  for (size_t i : {size_t(1), size_t(10), size_t(100), size_t(999), size_t(2000)}) {
    double exact = F.at(i).get_d();
    CHECK(std::abs(Fd.at(i) - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("series_prefix and series_zderiv") {
  RatSeries a = from_longs({1, 2, 3});
  RatSeries ps = series_prefix(a);
  CHECK(ps.at(0) == 1);
  CHECK(ps.at(1) == 3);
  CHECK(ps.at(2) == 6);
  RatSeries zd = series_zderiv(a);
  CHECK(zd.at(0) == 0);
  CHECK(zd.at(1) == 2);
  CHECK(zd.at(2) == 6);
}
