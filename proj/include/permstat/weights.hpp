#ifndef PERMSTAT_WEIGHTS_HPP
#define PERMSTAT_WEIGHTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permstat/rational.hpp"
#include "permstat/series.hpp"

namespace permstat {

enum class WeightKind { uniform, ewens, coprime, table };

// Weight system d_1..d_{n_max} defining the measure nu_{n,d}, with the
// partition-generating coefficients p_n from the recurrence
// n p_n = sum_{k<=n} d_k p_{n-k}, p_0 = 1. Exact rationals are kept up to
// n_max <= 2000 (rational bit growth beyond that); a double mirror is always
// present. Immutable after construction.
class WeightSystem {
 public:
  WeightKind kind() const { return kind_; }
  int n_max() const { return n_max_; }
  bool exact() const { return exact_; }
  const Rat& theta() const { return theta_; }
  int coprime_k() const { return coprime_k_; }

  const Rat& d(int j) const;        // 1 <= j <= n_max (exact mode)
  double d_dbl(int j) const;        // always available
  const Rat& p(int n) const;        // 0 <= n <= n_max (exact mode)
  double p_dbl(int n) const;        // always available

  // Recorded bounds 0 < d^- <= d_j <= d^+; d_minus is absent when some
  // d_j = 0 (coprime/table kinds), and operations that need d^- > 0 must
  // reject such systems.
  std::optional<Rat> d_minus() const { return d_minus_; }
  std::optional<Rat> d_plus() const { return d_plus_; }

  // p(x) for real 0 <= x < 1 by closed form where one exists
  // (uniform/ewens/coprime), truncated sum for table kind.
  double p_at(double x) const;

  std::string describe() const;

  friend WeightSystem make_uniform(int n_max, bool exact);
  friend WeightSystem make_ewens(const Rat& theta, int n_max, bool exact);
  friend WeightSystem make_coprime(int k, int n_max, bool exact);
  friend WeightSystem make_table(const std::vector<Rat>& d, int n_max, bool exact);

 private:
  WeightSystem() = default;
  static WeightSystem build(WeightKind kind, int n_max, bool exact,
                            const std::function<Rat(int)>& dj);
  void fill_p();

  WeightKind kind_ = WeightKind::uniform;
  int n_max_ = 0;
  bool exact_ = true;
  Rat theta_;        // ewens
  int coprime_k_ = 0;
  std::vector<Rat> d_;       // index 1..n_max (exact mode only for table data)
  std::vector<double> d_dbl_;
  std::vector<Rat> p_;       // index 0..n_max (exact mode)
  std::vector<double> p_dbl_;
  std::optional<Rat> d_minus_, d_plus_;
};

inline constexpr int kExactPnLimit = 2000;

WeightSystem make_uniform(int n_max, bool exact = true);
WeightSystem make_ewens(const Rat& theta, int n_max, bool exact = true);
WeightSystem make_coprime(int k, int n_max, bool exact = true);
WeightSystem make_table(const std::vector<Rat>& d, int n_max, bool exact = true);

// Weight spec grammar: uniform | ewens:<rational> | coprime:<int> | table:<path>.
// Exact mode is chosen automatically (n_max <= 2000).
WeightSystem parse_weights(const std::string& spec, int n_max);

// Reads a CSV weight table `j,d_j`; missing j default to 0.
std::vector<Rat> load_weight_table(const std::string& path, int n_max);

// p(z) as a truncated series, equal to exp(sum d_j z^j / j).
RatSeries p_series_exact(const WeightSystem& w, size_t N);
DSeries p_series_dbl(const WeightSystem& w, size_t N);

// Law of the cycle length containing a marked element:
// P(len = j) = d_j p_{n-j} / (n p_n), j = 1..n. Sums to 1 exactly.
std::vector<Rat> first_cycle_dist(const WeightSystem& w, int n);
std::vector<double> first_cycle_dist_dbl(const WeightSystem& w, int n);

// Closed form binom(n+theta-1, n) for the Ewens p_n, as an exact rational.
Rat ewens_pn_closed_form(const Rat& theta, int n);

}  // namespace permstat

#endif
