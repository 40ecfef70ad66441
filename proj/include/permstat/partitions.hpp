#ifndef PERMSTAT_PARTITIONS_HPP
#define PERMSTAT_PARTITIONS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/weights.hpp"

namespace permstat {

// Cycle type of a permutation of n: alpha[j] = number of cycles of length j,
// sum j*alpha[j] = n. alpha is 1-indexed (alpha[0] unused).
struct CycleType {
  int n = 0;
  std::vector<int> alpha;
};

// Statistics of a cycle type. O is lcm{j : alpha_j > 0} (group order), kept
// as an exact prime->max-exponent factorization; P = prod j^{alpha_j}.
struct StatValue {
  long omega = 0;
  double log_P = 0.0;
  double log_O = 0.0;
  Int P, O;
  std::map<long, int> order_factorization;  // prime -> exponent in O
  long dnk(const CycleType& t, int k) const;  // D_{nk} = sum_{k|j} alpha_j
};

StatValue stat_of(const CycleType& t);
long dnk_of(const CycleType& t, int k);

// Visits every cycle type of n exactly once, largest part first
// (deterministic order). Guarded at n <= 90 (p(90) ~ 5.7e7 types).
void iterate_cycle_types(int n, const std::function<void(const CycleType&)>& visit);

// nu_{n,d}(type) = (1/p_n) prod_j (d_j/j)^{alpha_j} / alpha_j!, exact.
Rat type_probability(const WeightSystem& w, const CycleType& t);

// Mineev-Pavlov criterion: t is the type of some k-th power iff
// q_k(j) | alpha_j for every j.
bool pavlov_filter(int k, const CycleType& t);

enum class StatSelector { omega, log_P, log_O, log_P_minus_log_O, dnk, additive };

struct StatSpec {
  StatSelector sel = StatSelector::omega;
  int k = 0;                          // for dnk
  std::vector<Rat> additive_table;    // 1-indexed, for additive
};

// One atom of an exact distribution: exact rational key (merging), display
// value, exact probability. Keys: omega/D_nk -> the integer; log P -> P;
// log O -> O; log P - log O -> P/O; additive -> the rational value itself.
struct DistEntry {
  Rat key;
  double value = 0.0;
  Rat prob;
};

struct Distribution {
  std::vector<DistEntry> entries;  // sorted ascending by value
  double mean() const;
  Rat prob_of_key(const Rat& key) const;  // 0 if absent
  bool exactly_equal(const Distribution& o) const;
};

// Exact distribution of a statistic under nu_{n,d}, or under the uniform
// measure on S_n^{(k)} when snk_k is given (uniform weights required; the
// Pavlov-filtered mass is renormalized).
Distribution exact_distribution(const WeightSystem& w, int n, const StatSpec& stat,
                                std::optional<int> snk_k = std::nullopt);

// Independent oracle: iterates all n! permutations (n <= 8), decomposes into
// cycles, and weights by d(sigma)/sum d. With snk_k set it enumerates the set
// {x^k : x in S_n} and uses the uniform measure on it. Test use only.
Distribution brute_force(int n, const StatSpec& stat, const WeightSystem& w,
                         std::optional<int> snk_k = std::nullopt);

// Exact rational value of a statistic on one type (additive/dnk/omega only
// have rational keys; see DistEntry).
Rat stat_key(const StatSpec& stat, const CycleType& t);
double stat_value_dbl(const StatSpec& stat, const CycleType& t);

}  // namespace permstat

#endif
