#include "permstat/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permstat {

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

const Rat& WeightSystem::d(int j) const {
  if (j < 1 || j > n_max_) throw std::out_of_range("WeightSystem::d: j out of range");
  return d_[j];
}
double WeightSystem::d_dbl(int j) const {
  if (j < 1 || j > n_max_) throw std::out_of_range("WeightSystem::d_dbl: j out of range");
  return d_dbl_[j];
}
const Rat& WeightSystem::p(int n) const {
  if (!exact_) throw std::logic_error("WeightSystem::p: exact coefficients not stored (float mode)");
  if (n < 0 || n > n_max_) throw std::out_of_range("WeightSystem::p: n out of range");
  return p_[n];
}
double WeightSystem::p_dbl(int n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("WeightSystem::p_dbl: n out of range");
  return p_dbl_[n];
}

void WeightSystem::fill_p() {
  // n p_n = sum_{k=1}^n d_k p_{n-k}
  if (exact_) {
    p_.assign(n_max_ + 1, Rat(0));
    p_[0] = 1;
    for (int n = 1; n <= n_max_; ++n) {
      Rat s(0);
      for (int k = 1; k <= n; ++k)
        if (d_[k] != 0) s += d_[k] * p_[n - k];
      p_[n] = s / n;
    }
    p_dbl_.resize(n_max_ + 1);
    for (int n = 0; n <= n_max_; ++n) p_dbl_[n] = p_[n].get_d();
  } else {
    p_dbl_.assign(n_max_ + 1, 0.0);
    p_dbl_[0] = 1.0;
    for (int n = 1; n <= n_max_; ++n) {
      double s = 0.0;
      for (int k = 1; k <= n; ++k)
        if (d_dbl_[k] != 0.0) s += d_dbl_[k] * p_dbl_[n - k];
      p_dbl_[n] = s / n;
    }
  }
}

double WeightSystem::p_at(double x) const {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("WeightSystem::p_at: need 0 <= x < 1");
  switch (kind_) {
    case WeightKind::uniform:
      return 1.0 / (1.0 - x);
    case WeightKind::ewens:
      return std::pow(1.0 - x, -theta_.get_d());
    case WeightKind::coprime: {
      // p(z) = prod_{m|k} (1 - z^m)^{-mu(m)/m}
      double lg = 0.0;
      for (int m = 1; m <= coprime_k_; ++m)
        if (coprime_k_ % m == 0) {
          int mu = mobius(m);
          if (mu != 0) lg -= double(mu) / m * std::log1p(-std::pow(x, m));
        }
      return std::exp(lg);
    }
    case WeightKind::table: {
      // truncated at n_max; adequate for x with x^{n_max} negligible
      double lg = 0.0;
      for (int j = n_max_; j >= 1; --j) lg = lg * x + d_dbl_[j] / j;
      return std::exp(lg * x);
    }
  }
  return 1.0;
}

std::string WeightSystem::describe() const {
  switch (kind_) {
    case WeightKind::uniform: return "uniform";
    case WeightKind::ewens: return "ewens:" + theta_.get_str();
    case WeightKind::coprime: return "coprime:" + std::to_string(coprime_k_);
    case WeightKind::table: return "table";
  }
  return "?";
}

WeightSystem WeightSystem::build(WeightKind kind, int n_max, bool exact,
                                 const std::function<Rat(int)>& dj) {
  if (n_max < 1) throw std::invalid_argument("make_weights: n_max must be >= 1");
  if (exact && n_max > kExactPnLimit)
    throw std::invalid_argument("make_weights: exact mode limited to n_max <= 2000");
  WeightSystem w;
  w.kind_ = kind;
  w.n_max_ = n_max;
  w.exact_ = exact;
  w.d_.assign(n_max + 1, Rat(0));
  w.d_dbl_.assign(n_max + 1, 0.0);
  bool has_zero = false;
  Rat dmin, dmax;
  bool first = true;
  for (int j = 1; j <= n_max; ++j) {
    w.d_[j] = dj(j);
    if (w.d_[j] < 0) throw std::invalid_argument("make_weights: negative weight");
    w.d_dbl_[j] = w.d_[j].get_d();
    if (w.d_[j] == 0) has_zero = true;
    if (first) { dmin = dmax = w.d_[j]; first = false; }
    else { dmin = std::min(dmin, w.d_[j]); dmax = std::max(dmax, w.d_[j]); }
  }
  if (!has_zero) w.d_minus_ = dmin;
  w.d_plus_ = dmax;
  return w;
}

WeightSystem make_uniform(int n_max, bool exact) {
  WeightSystem w = WeightSystem::build(WeightKind::uniform, n_max, exact, [](int) { return Rat(1); });
  w.fill_p();
  return w;
}

WeightSystem make_ewens(const Rat& theta, int n_max, bool exact) {
  if (theta <= 0) throw std::invalid_argument("make_ewens: theta must be > 0");
  WeightSystem w = WeightSystem::build(WeightKind::ewens, n_max, exact, [&](int) { return theta; });
  w.theta_ = theta;
  w.fill_p();
  return w;
}

WeightSystem make_coprime(int k, int n_max, bool exact) {
  if (k < 1) throw std::invalid_argument("make_coprime: k must be >= 1");
  WeightSystem w = WeightSystem::build(WeightKind::coprime, n_max, exact,
                         [&](int j) { return Rat(std::gcd(j, k) == 1 ? 1 : 0); });
  w.coprime_k_ = k;
  w.fill_p();
  return w;
}

WeightSystem make_table(const std::vector<Rat>& d, int n_max, bool exact) {
  if (int(d.size()) < n_max + 1)
    throw std::invalid_argument("make_table: table shorter than n_max");
  bool all_zero = true;
  for (int j = 1; j <= n_max; ++j)
    if (d[j] != 0) { all_zero = false; break; }
  if (all_zero) throw std::invalid_argument("make_table: all weights zero");
  WeightSystem w = WeightSystem::build(WeightKind::table, n_max, exact, [&](int j) { return d[j]; });
  w.fill_p();
  return w;
}

WeightSystem parse_weights(const std::string& spec, int n_max) {
  bool exact = n_max <= kExactPnLimit;
  if (spec == "uniform") return make_uniform(n_max, exact);
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (head == "ewens") return make_ewens(parse_rat(arg), n_max, exact);
    if (head == "coprime") return make_coprime(std::stoi(arg), n_max, exact);
    if (head == "table") return make_table(load_weight_table(arg, n_max), n_max, exact);
  }
  throw std::invalid_argument("parse_weights: bad spec '" + spec +
                              "' (want uniform | ewens:<rat> | coprime:<int> | table:<path>)");
}

std::vector<Rat> load_weight_table(const std::string& path, int n_max) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_weight_table: cannot open " + path);
  std::vector<Rat> d(n_max + 1, Rat(0));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("load_weight_table: bad row '" + line + "'");
    int j = std::stoi(line.substr(0, comma));
    if (j >= 1 && j <= n_max) d[j] = parse_rat(line.substr(comma + 1));
  }
  return d;
}

RatSeries p_series_exact(const WeightSystem& w, size_t N) {
  if (int(N) > w.n_max()) throw std::out_of_range("p_series_exact: N beyond n_max");
  RatSeries L(N);
  for (size_t j = 1; j <= N; ++j) L.at(j) = w.d(int(j)) / long(j);
  return series_exp(L);
}

DSeries p_series_dbl(const WeightSystem& w, size_t N) {
  if (int(N) > w.n_max()) throw std::out_of_range("p_series_dbl: N beyond n_max");
  DSeries L(N);
  for (size_t j = 1; j <= N; ++j) L.at(j) = w.d_dbl(int(j)) / double(j);
  return series_exp(L);
}

std::vector<Rat> first_cycle_dist(const WeightSystem& w, int n) {
  if (n < 1 || n > w.n_max()) throw std::out_of_range("first_cycle_dist: n out of range");
  if (w.p(n) == 0) throw std::domain_error("first_cycle_dist: p_n = 0 (degenerate weights)");
  std::vector<Rat> q(n + 1, Rat(0));
  Rat denom = Rat(n) * w.p(n);
  for (int j = 1; j <= n; ++j) q[j] = w.d(j) * w.p(n - j) / denom;
  return q;
}

std::vector<double> first_cycle_dist_dbl(const WeightSystem& w, int n) {
  if (n < 1 || n > w.n_max()) throw std::out_of_range("first_cycle_dist_dbl: n out of range");
  if (w.p_dbl(n) <= 0) throw std::domain_error("first_cycle_dist_dbl: p_n = 0 (degenerate weights)");
  std::vector<double> q(n + 1, 0.0);
  double denom = double(n) * w.p_dbl(n);
  for (int j = 1; j <= n; ++j) q[j] = w.d_dbl(j) * w.p_dbl(n - j) / denom;
  return q;
}

Rat ewens_pn_closed_form(const Rat& theta, int n) {
  Rat r(1);
  for (int i = 1; i <= n; ++i) r *= (theta + (i - 1)) / i;
  return r;
}

}  // namespace permstat
