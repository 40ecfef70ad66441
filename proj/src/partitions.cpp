#include "permstat/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "permstat/snk.hpp"

namespace permstat {

long dnk_of(const CycleType& t, int k) {
  long s = 0;
  for (int j = k; j <= t.n; j += k) s += t.alpha[j];
  return s;
}

long StatValue::dnk(const CycleType& t, int k) const { return dnk_of(t, k); }

StatValue stat_of(const CycleType& t) {
  StatValue s;
  s.P = 1;
  s.O = 1;
  double logP = 0.0;
  for (int j = 1; j <= t.n; ++j) {
    if (t.alpha[j] == 0) continue;
    s.omega += t.alpha[j];
    logP += t.alpha[j] * std::log(double(j));
    Int jp(j);
    mpz_pow_ui(jp.get_mpz_t(), jp.get_mpz_t(), t.alpha[j]);
    s.P *= jp;
    // prime -> max exponent over the cycle lengths present
    int m = j;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        auto& cur = s.order_factorization[p];
        cur = std::max(cur, e);
      }
    }
    if (m > 1) {
      auto& cur = s.order_factorization[m];
      cur = std::max(cur, 1);
    }
  }
  double logO = 0.0;
  for (auto& [p, e] : s.order_factorization) {
    Int pp(p);
    mpz_pow_ui(pp.get_mpz_t(), pp.get_mpz_t(), e);
    s.O *= pp;
    logO += e * std::log(double(p));
  }
  s.log_P = logP;
  s.log_O = logO;
  return s;
}

void iterate_cycle_types(int n, const std::function<void(const CycleType&)>& visit) {
  if (n < 1) throw std::invalid_argument("iterate_cycle_types: n must be >= 1");
  if (n > 90) throw std::invalid_argument("iterate_cycle_types: n > 90 (partition count guard)");
  CycleType t;
  t.n = n;
  t.alpha.assign(n + 1, 0);
  // recursive descent, largest part first
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      visit(t);
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      t.alpha[part] += 1;
      rec(remaining - part, part);
      t.alpha[part] -= 1;
    }
  };
  rec(n, n);
}

Rat type_probability(const WeightSystem& w, const CycleType& t) {
  if (t.n > w.n_max()) throw std::out_of_range("type_probability: n beyond n_max");
  if (w.p(t.n) == 0) throw std::domain_error("type_probability: p_n = 0");
  Rat prod(1);
  for (int j = 1; j <= t.n; ++j) {
    int a = t.alpha[j];
    if (a == 0) continue;
    if (w.d(j) == 0) return Rat(0);
    Rat base = w.d(j) / j;
    for (int i = 0; i < a; ++i) prod *= base / (i + 1);  // base^a / a!
  }
  return prod / w.p(t.n);
}

bool pavlov_filter(int k, const CycleType& t) {
  if (k < 1) throw std::invalid_argument("pavlov_filter: k must be >= 1");
  if (k == 1) return true;
  for (int j = 1; j <= t.n; ++j)
    if (t.alpha[j] % qk(k, j) != 0) return false;
  return true;
}

Rat stat_key(const StatSpec& stat, const CycleType& t) {
  switch (stat.sel) {
    case StatSelector::omega: {
      long w = 0;
      for (int j = 1; j <= t.n; ++j) w += t.alpha[j];
      return Rat(w);
    }
    case StatSelector::dnk:
      return Rat(dnk_of(t, stat.k));
    case StatSelector::additive: {
      Rat s(0);
      for (int j = 1; j <= t.n; ++j)
        if (t.alpha[j]) s += stat.additive_table[j] * t.alpha[j];
      return s;
    }
    case StatSelector::log_P:
      return Rat(stat_of(t).P);
    case StatSelector::log_O:
      return Rat(stat_of(t).O);
    case StatSelector::log_P_minus_log_O: {
      StatValue s = stat_of(t);
      Rat r(s.P, s.O);
      r.canonicalize();
      return r;
    }
  }
  throw std::logic_error("stat_key: bad selector");
}

double stat_value_dbl(const StatSpec& stat, const CycleType& t) {
  switch (stat.sel) {
    case StatSelector::omega:
    case StatSelector::dnk:
    case StatSelector::additive:
      return stat_key(stat, t).get_d();
    case StatSelector::log_P:
      return stat_of(t).log_P;
    case StatSelector::log_O:
      return stat_of(t).log_O;
    case StatSelector::log_P_minus_log_O: {
      StatValue s = stat_of(t);
      return s.log_P - s.log_O;
    }
  }
  throw std::logic_error("stat_value_dbl: bad selector");
}

namespace {

double display_value(const StatSpec& stat, const Rat& key) {
  switch (stat.sel) {
    case StatSelector::omega:
    case StatSelector::dnk:
    case StatSelector::additive:
      return key.get_d();
    case StatSelector::log_P:
    case StatSelector::log_O:
    case StatSelector::log_P_minus_log_O:
      return log_mpq(key);
  }
  return 0.0;
}

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return a < b; }
};

Distribution finalize(const StatSpec& stat, std::map<Rat, Rat, RatLess>& acc) {
  Distribution d;
  d.entries.reserve(acc.size());
  for (auto& [key, prob] : acc)
    d.entries.push_back({key, display_value(stat, key), prob});
  // keys are monotone in the displayed value for every selector, so the map
  // order is already ascending by value
  return d;
}

}  // namespace

double Distribution::mean() const {
  double s = 0.0;
  for (auto& e : entries) s += e.value * e.prob.get_d();
  return s;
}

Rat Distribution::prob_of_key(const Rat& key) const {
  for (auto& e : entries)
    if (e.key == key) return e.prob;
  return Rat(0);
}

bool Distribution::exactly_equal(const Distribution& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].key != o.entries[i].key || entries[i].prob != o.entries[i].prob)
      return false;
  return true;
}

Distribution exact_distribution(const WeightSystem& w, int n, const StatSpec& stat,
                                std::optional<int> snk_k) {
  if (snk_k && w.kind() != WeightKind::uniform)
    throw std::invalid_argument("exact_distribution: S_n^{(k)} case requires uniform weights");
  std::map<Rat, Rat, RatLess> acc;
  Rat total(0);
  iterate_cycle_types(n, [&](const CycleType& t) {
    if (snk_k && !pavlov_filter(*snk_k, t)) return;
    Rat pr = type_probability(w, t);
    if (pr == 0) return;
    acc[stat_key(stat, t)] += pr;
    total += pr;
  });
  if (total == 0) throw std::domain_error("exact_distribution: empty support");
  if (snk_k)
    for (auto& [k, v] : acc) v /= total;
  return finalize(stat, acc);
}

namespace {

CycleType type_of_perm(const std::vector<int>& perm) {
  int n = int(perm.size());
  CycleType t;
  t.n = n;
  t.alpha.assign(n + 1, 0);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    t.alpha[len] += 1;
  }
  return t;
}

std::vector<int> perm_power(const std::vector<int>& x, int k) {
  int n = int(x.size());
  std::vector<int> r(n), cur(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  cur = x;
  int e = k;
  while (e > 0) {  // binary power in the symmetric group
    if (e & 1) {
      std::vector<int> nr(n);
      for (int i = 0; i < n; ++i) nr[i] = cur[r[i]];
      r = nr;
    }
    std::vector<int> c2(n);
    for (int i = 0; i < n; ++i) c2[i] = cur[cur[i]];
    cur = c2;
    e >>= 1;
  }
  return r;
}

}  // namespace

Distribution brute_force(int n, const StatSpec& stat, const WeightSystem& w,
                         std::optional<int> snk_k) {
  if (n < 1 || n > 8) throw std::invalid_argument("brute_force: n must be in 1..8");
  std::map<Rat, Rat, RatLess> acc;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  if (snk_k) {
    if (w.kind() != WeightKind::uniform)
      throw std::invalid_argument("brute_force: S_n^{(k)} case requires uniform weights");
    // enumerate the set {x^k}, uniform on distinct elements
    std::vector<std::vector<int>> powers;
    do {
      powers.push_back(perm_power(perm, *snk_k));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    Rat each(1, long(powers.size()));
    for (auto& s : powers) acc[stat_key(stat, type_of_perm(s))] += each;
    return finalize(stat, acc);
  }

  Rat total(0);
  do {
    CycleType t = type_of_perm(perm);
    Rat dw(1);
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < t.alpha[j]; ++i) dw *= w.d(j);
    if (dw == 0) continue;  // outside the support of nu_{n,d}
    acc[stat_key(stat, t)] += dw;
    total += dw;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& [k, v] : acc) v /= total;
  return finalize(stat, acc);
}

}  // namespace permstat
