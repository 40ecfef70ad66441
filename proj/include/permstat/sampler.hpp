#ifndef PERMSTAT_SAMPLER_HPP
#define PERMSTAT_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permstat/partitions.hpp"
#include "permstat/weights.hpp"

namespace permstat {

// xoshiro256** with SplitMix64 stream derivation. Per-replicate streams are
// keyed by seed ^ replicate index, so parallel and serial runs produce the
// same replicate values.
inline constexpr const char* kPrngId = "xoshiro256**/splitmix64(seed^replicate)";

class Rng {
 public:
  explicit Rng(std::uint64_t key);
  std::uint64_t next();
  double uniform01();             // 53-bit mantissa in [0,1)
  long uniform_long(long n);      // uniform in 1..n
 private:
  std::uint64_t s_[4];
};

Rng derive_rng(std::uint64_t seed, std::uint64_t replicate);

// One cycle type under nu_{n,d}. Uniform weights use the O(omega)
// stick-breaking draw (next length uniform on the remaining mass); Ewens uses
// the Feller coupling (O(n) Bernoullis); coprime/table scan the conditional
// law d_j p_{m-j}/(m p_m) directly.
CycleType sample_cycle_type(const WeightSystem& w, int n, Rng& rng);

// Uniform on S_n^{(k)} by rejection: sample uniform types until the
// Mineev-Pavlov filter passes. Returns the accepted type; trials reports the
// number of attempts.
CycleType sample_snk(int k, int n, Rng& rng, long* trials = nullptr);

struct SampleConfig {
  int n = 0;
  long R = 1;
  std::uint64_t seed = 0;
  std::string measure = "uniform";
  int snk_k = 0;  // 0 = plain nu_{n,d}
  int threads = 1;
};

// R replicate values of a cycle-type functional, replicate i drawn from
// derive_rng(seed, i). Deterministic for fixed seed regardless of threads.
std::vector<double> run_samples(const SampleConfig& cfg, const WeightSystem& w,
                                const std::function<double(const CycleType&)>& stat);

// Empirical CDF with the strict-inequality convention F(x) = #{v < x}/R.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);
  double operator()(double x) const;
  const std::vector<double>& sorted() const { return v_; }
 private:
  std::vector<double> v_;
};

// sup over sample atoms a of max(|F(a-) - G(a)|, |F(a+) - G(a)|).
double sup_distance(const EmpiricalCdf& F, const std::function<double(double)>& G);

}  // namespace permstat

#endif
