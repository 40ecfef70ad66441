// permstat: distributions and mean values of additive/multiplicative
// statistics of weighted random permutations, S_n^{(k)}, and random monic
// polynomials over F_q. JSON for scalar reports, CSV for distributions.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "permstat/additive.hpp"
#include "permstat/fqpoly.hpp"
#include "permstat/multiplicative.hpp"
#include "permstat/normal.hpp"
#include "permstat/orderstat.hpp"
#include "permstat/partitions.hpp"
#include "permstat/sampler.hpp"
#include "permstat/snk.hpp"
#include "permstat/weights.hpp"
#include "permstat/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace permstat;

namespace {

constexpr const char* kVersion = "permstat 0.1.0";

uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= uint8_t(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string joined_argv(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
  return os.str();
}

json base_meta(const std::string& cmdline) {
  json m;
  m["command"] = cmdline;
  m["version"] = kVersion;
  m["prng"] = kPrngId;
  return m;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    f << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& s, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(out_path);
    f << s;
  }
}

StatSpec parse_stat(const std::string& s, int n) {
  StatSpec spec;
  if (s == "omega") spec.sel = StatSelector::omega;
  else if (s == "logP") spec.sel = StatSelector::log_P;
  else if (s == "logO") spec.sel = StatSelector::log_O;
  else if (s == "logPO") spec.sel = StatSelector::log_P_minus_log_O;
  else if (s.rfind("D:", 0) == 0) {
    spec.sel = StatSelector::dnk;
    spec.k = std::stoi(s.substr(2));
  } else if (s.rfind("add:", 0) == 0) {
    spec.sel = StatSelector::additive;
    std::ifstream in(s.substr(4));
    if (!in) throw std::runtime_error("stat: cannot open additive table " + s.substr(4));
    spec.additive_table.assign(n + 1, Rat(0));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto comma = line.find(',');
      int j = std::stoi(line.substr(0, comma));
      if (j >= 1 && j <= n) spec.additive_table[j] = parse_rat(line.substr(comma + 1));
    }
  } else {
    throw std::runtime_error("stat: want omega|logP|logO|logPO|D:<k>|add:<path>");
  }
  return spec;
}

std::string default_zeros_path() {
  if (const char* env = std::getenv("PERMSTAT_ZEROS")) return env;
  return "data/zeta_zeros_100.txt";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permstat: statistics of weighted random permutations, S_n^{(k)}, and F_q polynomials (all logs natural)"};
  app.require_subcommand(1);
  std::string cmdline = joined_argv(argc, argv);

  std::string out_path;
  app.add_option("--out", out_path, "write output to this path instead of stdout");
  bool force_json = false;
  app.add_flag("--json", force_json, "emit JSON instead of CSV everywhere");

  // ---- pn
  auto* c_pn = app.add_subcommand("pn", "p_0..p_n of a weight system (CSV)");
  std::string pn_weights = "uniform";
  int pn_n = 10;
  c_pn->add_option("--weights", pn_weights, "uniform | ewens:<rat> | coprime:<int> | table:<path>");
  c_pn->add_option("--n", pn_n, "truncation order")->required();

  // ---- mean-mult
  auto* c_mm = app.add_subcommand("mean-mult", "mean value report of a multiplicative function (JSON)");
  std::string mm_weights = "uniform", mm_fhat;
  int mm_n = 100;
  double mm_p = kPInf, mm_u = 0.1;
  std::string mm_const;
  c_mm->add_option("--weights", mm_weights, "weight spec");
  c_mm->add_option("--n", mm_n)->required();
  c_mm->add_option("--fhat", mm_fhat, "CSV j,re,im of fhat values");
  c_mm->add_option("--fhat-const", mm_const, "constant fhat re[,im]");
  c_mm->add_option("--p", mm_p, "norm exponent for rho(p) (default inf)");
  c_mm->add_option("--u", mm_u, "truncation level of E(u)");

  // ---- voronoi
  auto* c_vo = app.add_subcommand("voronoi", "Voronoi (W, r_n) mean of a series (JSON)");
  std::string vo_weights = "uniform", vo_terms;
  int vo_n = 100;
  c_vo->add_option("--weights", vo_weights, "weight spec for r_j = p_j");
  c_vo->add_option("--terms", vo_terms, "CSV k,value with series terms a_k")->required();
  c_vo->add_option("--n", vo_n)->required();

  // ---- exact
  auto* c_ex = app.add_subcommand("exact", "exact distribution of a statistic (CSV value,prob_num,prob_den)");
  std::string ex_weights = "uniform", ex_stat = "omega";
  int ex_n = 5, ex_snk = 0;
  c_ex->add_option("--weights", ex_weights);
  c_ex->add_option("--n", ex_n)->required();
  c_ex->add_option("--stat", ex_stat, "omega|logP|logO|logPO|D:<k>|add:<path>");
  c_ex->add_option("--snk", ex_snk, "restrict to S_n^{(k)} (uniform weights)");

  // ---- sample
  auto* c_sa = app.add_subcommand("sample", "Monte Carlo sample of a statistic (CSV replicate,value)");
  std::string sa_weights = "uniform", sa_stat = "omega";
  int sa_n = 100, sa_snk = 0, sa_threads = 1;
  long sa_R = 1000;
  uint64_t sa_seed = 1;
  c_sa->add_option("--weights", sa_weights);
  c_sa->add_option("--n", sa_n)->required();
  c_sa->add_option("--R", sa_R, "replicates");
  c_sa->add_option("--seed", sa_seed);
  c_sa->add_option("--stat", sa_stat);
  c_sa->add_option("--snk", sa_snk, "sample uniform on S_n^{(k)}");
  c_sa->add_option("--threads", sa_threads);

  // ---- et
  auto* c_et = app.add_subcommand("et", "Erdos-Turan sup-distance experiment (JSON)");
  std::string et_variant = "uniform";
  int et_n = 1000, et_threads = 1;
  long et_R = 10000;
  uint64_t et_seed = 1;
  c_et->add_option("--variant", et_variant, "uniform | ewens:<theta> | snk:<k>");
  c_et->add_option("--n", et_n)->required();
  c_et->add_option("--R", et_R);
  c_et->add_option("--seed", et_seed);
  c_et->add_option("--threads", et_threads);

  // ---- mean-order
  auto* c_mo = app.add_subcommand("mean-order", "exact and asymptotic E log O_n on S_n (JSON)");
  long mo_n = 1000;
  std::string mo_zeros = default_zeros_path();
  int mo_count = 100;
  c_mo->add_option("--n", mo_n)->required();
  c_mo->add_option("--zeros", mo_zeros, "zeros file (or PERMSTAT_ZEROS)");
  c_mo->add_option("--zero-count", mo_count);

  // ---- zeta-sum
  auto* c_zs = app.add_subcommand("zeta-sum", "sum over nontrivial zeros of Gamma(-rho) x^rho (JSON)");
  double zs_x = 10.0;
  std::string zs_zeros = default_zeros_path();
  int zs_count = 100;
  c_zs->add_option("--x", zs_x)->required();
  c_zs->add_option("--zeros", zs_zeros);
  c_zs->add_option("--zero-count", zs_count);

  // ---- fq
  auto* c_fq = app.add_subcommand("fq", "random monic polynomials over F_q (CSV/JSON)");
  long fq_q = 2;
  int fq_n = 5;
  bool fq_brute = false;
  std::string fq_stat;
  c_fq->add_option("--q", fq_q)->required();
  c_fq->add_option("--n", fq_n)->required();
  c_fq->add_flag("--brute", fq_brute, "use the enumeration oracle");
  c_fq->add_option("--stat", fq_stat, "xi:<k> | logO | logP | Dzero:<k>");

  // ---- snk
  auto* c_sn = app.add_subcommand("snk", "S_n^{(k)} structure and density (JSON)");
  int sn_k = 2, sn_n = 10;
  bool sn_asym = false;
  c_sn->add_option("--k", sn_k)->required();
  c_sn->add_option("--n", sn_n)->required();
  c_sn->add_flag("--asym", sn_asym, "include the Pavlov asymptotic density");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (*c_pn) {
      WeightSystem w = parse_weights(pn_weights, pn_n);
      if (force_json) {
        json j = base_meta(cmdline);
        j["weights"] = w.describe();
        json rows = json::array();
        for (int i = 0; i <= pn_n; ++i) {
          if (w.exact())
            rows.push_back({{"n", i},
                            {"p_num", w.p(i).get_num().get_str()},
                            {"p_den", w.p(i).get_den().get_str()}});
          else
            rows.push_back({{"n", i}, {"p", w.p_dbl(i)}});
        }
        j["p"] = rows;
        emit(j, out_path);
      } else {
        std::ostringstream os;
        os << "# " << cmdline << "\n# " << kVersion << "\n";
        if (w.exact()) {
          os << "n,p_num,p_den\n";
          for (int i = 0; i <= pn_n; ++i)
            os << i << "," << w.p(i).get_num().get_str() << "," << w.p(i).get_den().get_str() << "\n";
        } else {
          os << "n,p\n";
          char buf[40];
          for (int i = 0; i <= pn_n; ++i) {
            snprintf(buf, sizeof buf, "%.17g", w.p_dbl(i));
            os << i << "," << buf << "\n";
          }
        }
        emit_text(os.str(), out_path);
      }
    } else if (*c_mm) {
      WeightSystem w = parse_weights(mm_weights, mm_n);
      FhatC fhat(mm_n + 1, 1.0);
      if (!mm_const.empty()) {
        auto comma = mm_const.find(',');
        double re = std::stod(mm_const.substr(0, comma));
        double im = comma == std::string::npos ? 0.0 : std::stod(mm_const.substr(comma + 1));
        for (int j = 1; j <= mm_n; ++j) fhat[j] = {re, im};
      } else if (!mm_fhat.empty()) {
        std::ifstream in(mm_fhat);
        if (!in) throw std::runtime_error("mean-mult: cannot open " + mm_fhat);
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#') continue;
          std::istringstream ls(line);
          std::string a, b, c;
          std::getline(ls, a, ',');
          std::getline(ls, b, ',');
          std::getline(ls, c, ',');
          int j = std::stoi(a);
          if (j >= 1 && j <= mm_n) fhat[j] = {std::stod(b), c.empty() ? 0.0 : std::stod(c)};
        }
      }
      MeanValueReport r = mean_report(w, fhat, mm_n, mm_p, mm_u);
      json j = base_meta(cmdline);
      j["weights"] = w.describe();
      j["n"] = mm_n;
      j["exact_mean"] = {r.exact_mean.real(), r.exact_mean.imag()};
      j["main_term"] = {r.main_term.real(), r.main_term.imag()};
      j["corrected_term"] = {r.corrected_term.real(), r.corrected_term.imag()};
      j["delta"] = r.delta;
      if (r.delta_bound) j["delta_bound"] = *r.delta_bound;
      if (r.measured_c) j["measured_c"] = *r.measured_c;
      j["rho_p"] = r.rho_p;
      j["E_u"] = r.E_u;
      j["u"] = r.u;
      emit(j, out_path);
    } else if (*c_vo) {
      WeightSystem w = parse_weights(vo_weights, vo_n);
      std::vector<double> a(vo_n + 1, 0.0);
      std::ifstream in(vo_terms);
      if (!in) throw std::runtime_error("voronoi: cannot open " + vo_terms);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        int k = std::stoi(line.substr(0, comma));
        if (k >= 0 && k <= vo_n) a[k] = std::stod(line.substr(comma + 1));
      }
      std::vector<double> r(vo_n + 1);
      for (int i = 0; i <= vo_n; ++i) r[i] = w.p_dbl(i);
      VoronoiResult res = voronoi_mean(r, a, vo_n);
      json j = base_meta(cmdline);
      j["n"] = vo_n;
      j["mean"] = res.mean;
      j["abel_proxy"] = res.abel_proxy;
      j["d_condition"] = res.d_condition;
      emit(j, out_path);
    } else if (*c_ex) {
      WeightSystem w = parse_weights(ex_weights, ex_n);
      StatSpec spec = parse_stat(ex_stat, ex_n);
      Distribution d = exact_distribution(w, ex_n, spec,
                                          ex_snk > 0 ? std::optional<int>(ex_snk) : std::nullopt);
      if (force_json) {
        json j = base_meta(cmdline);
        json rows = json::array();
        for (auto& e : d.entries)
          rows.push_back({{"value", e.value},
                          {"probability_num", e.prob.get_num().get_str()},
                          {"probability_den", e.prob.get_den().get_str()}});
        j["distribution"] = rows;
        emit(j, out_path);
      } else {
        std::ostringstream os;
        os << "# " << cmdline << "\n# " << kVersion << "\n";
        os << "value,probability_num,probability_den\n";
        char buf[40];
        for (auto& e : d.entries) {
          snprintf(buf, sizeof buf, "%.17g", e.value);
          os << buf << "," << e.prob.get_num().get_str() << "," << e.prob.get_den().get_str() << "\n";
        }
        emit_text(os.str(), out_path);
      }
    } else if (*c_sa) {
      WeightSystem w = parse_weights(sa_weights, sa_n);
      StatSpec spec = parse_stat(sa_stat, sa_n);
      SampleConfig cfg;
      cfg.n = sa_n;
      cfg.R = sa_R;
      cfg.seed = sa_seed;
      cfg.snk_k = sa_snk;
      cfg.threads = sa_threads;
      cfg.measure = sa_weights;
      auto vals = run_samples(cfg, w, [&](const CycleType& t) { return stat_value_dbl(spec, t); });
      json meta = base_meta(cmdline);
      meta["seed"] = sa_seed;
      meta["R"] = sa_R;
      meta["n"] = sa_n;
      meta["measure"] = sa_weights;
      if (sa_snk > 0) meta["snk_k"] = sa_snk;
      if (force_json) {
        json j = meta;
        j["values"] = vals;
        emit(j, out_path);
      } else {
        std::ostringstream os;
        os << "# meta " << meta.dump() << "\n";
        os << "replicate,stat_value\n";
        char buf[40];
        for (long i = 0; i < sa_R; ++i) {
          snprintf(buf, sizeof buf, "%.17g", vals[size_t(i)]);
          os << i << "," << buf << "\n";
        }
        emit_text(os.str(), out_path);
      }
    } else if (*c_et) {
      EtVariant v = EtVariant::uniform;
      int k = 2;
      double theta = 1.0;
      if (et_variant == "uniform") v = EtVariant::uniform;
      else if (et_variant.rfind("ewens:", 0) == 0) {
        v = EtVariant::ewens;
        theta = std::stod(et_variant.substr(6));
      } else if (et_variant.rfind("snk:", 0) == 0) {
        v = EtVariant::snk;
        k = std::stoi(et_variant.substr(4));
      } else {
        throw std::runtime_error("et: variant must be uniform | ewens:<theta> | snk:<k>");
      }
      EtReport r = et_experiment(v, et_n, et_R, et_seed, k, theta, et_threads);
      json j = base_meta(cmdline);
      j["variant"] = et_variant;
      j["n"] = r.n;
      j["R"] = r.R;
      j["seed"] = r.seed;
      j["centering"] = r.centering_used;
      j["centering_value"] = r.centering_value;
      j["model_scale"] = r.model_scale;
      j["scale_used"] = r.scale_used;
      j["sup_vs_Phi"] = r.sup_vs_Phi;
      j["sup_vs_model"] = r.sup_vs_model;
      emit(j, out_path);
    } else if (*c_mo) {
      ZeroTable t = load_zeros(mo_zeros);
      size_t cnt = std::min(size_t(mo_count), t.count());
      double mlp = mean_logP(mo_n), mu = mu_exact(mo_n);
      json j = base_meta(cmdline);
      j["zeros_file_hash"] = fnv1a_file(mo_zeros);
      j["n"] = mo_n;
      j["mean_logP"] = mlp;
      j["mu"] = mu;
      j["mean_logO"] = mlp - mu;
      if (mo_n >= 16)
        j["asym_mean_logO"] =
            asym_mean_logO(MeanOrderVariant::uniform, double(mo_n), t, cnt);
      emit(j, out_path);
    } else if (*c_zs) {
      ZeroTable t = load_zeros(zs_zeros);
      size_t cnt = std::min(size_t(zs_count), t.count());
      json j = base_meta(cmdline);
      j["zeros_file_hash"] = fnv1a_file(zs_zeros);
      j["x"] = zs_x;
      j["count"] = cnt;
      j["zero_sum"] = zero_sum(zs_x, t, cnt);
      emit(j, out_path);
    } else if (*c_fq) {
      json j = base_meta(cmdline);
      j["q"] = fq_q;
      j["n"] = fq_n;
      if (fq_stat.rfind("xi:", 0) == 0) {
        int k = std::stoi(fq_stat.substr(3));
        Rat m = mean_xi(fq_q, fq_n, k);
        j["stat"] = fq_stat;
        j["mean_xi"] = m.get_d();
        j["mean_xi_num"] = m.get_num().get_str();
        j["mean_xi_den"] = m.get_den().get_str();
        if (fq_brute) {
          FqBrute b(fq_q, fq_n);
          j["brute_mean_xi"] = b.mean([&](const std::vector<int>& xi) { return Rat(xi[k]); }).get_d();
        }
      } else if (fq_stat.rfind("Dzero:", 0) == 0) {
        int k = std::stoi(fq_stat.substr(6));
        j["stat"] = fq_stat;
        j["prob_Dnk_zero"] = prob_Dnk_zero_fq(fq_q, fq_n, k);
        if (fq_brute) {
          FqBrute b(fq_q, fq_n);
          j["brute_prob"] = b.mean([&](const std::vector<int>& xi) {
                               long d = 0;
                               for (int i = k; i <= fq_n; i += k) d += xi[i];
                               return Rat(d == 0 ? 1 : 0);
                             }).get_d();
        }
      } else if (fq_stat == "logO" || fq_stat == "logP") {
        if (!fq_brute) throw std::runtime_error("fq: logO/logP need --brute");
        FqBrute b(fq_q, fq_n);
        bool wantO = fq_stat == "logO";
        j["stat"] = fq_stat;
        j["mean"] = b.mean_dbl([&](const std::vector<int>& xi) {
          if (wantO) {
            long l = 1;
            for (int i = 1; i <= fq_n; ++i)
              if (xi[i] > 0) l = std::lcm(l, long(i));
            return std::log(double(l));
          }
          double s = 0.0;
          for (int i = 2; i <= fq_n; ++i) s += xi[i] * std::log(double(i));
          return s;
        });
      } else {
        // no stat: irreducible counts
        FqSpec s = make_fq_spec(fq_q, fq_n);
        json arr = json::array();
        for (int m = 1; m <= fq_n; ++m) arr.push_back(s.I[m].get_str());
        j["I"] = arr;
        json av = json::array();
        for (int m = 1; m <= fq_n; ++m) av.push_back(s.A[m]);
        j["A"] = av;
      }
      emit(j, out_path);
    } else if (*c_sn) {
      SnkStructure s = snk_structure(sn_k);
      json j = base_meta(cmdline);
      j["k"] = sn_k;
      j["k0"] = s.k0;
      j["gamma0"] = s.gamma0.get_d();
      json g = json::array();
      for (auto& x : s.gamma) g.push_back(x.get_d());
      j["gamma"] = g;
      j["beta"] = s.beta.get_d();
      j["A_k"] = s.A_k;
      if (sn_n <= 2000) {
        Rat c = snk_density(sn_k, sn_n);
        j["density_num"] = c.get_num().get_str();
        j["density_den"] = c.get_den().get_str();
        j["density"] = c.get_d();
      }
      if (sn_asym) j["density_asym"] = snk_density_asym(sn_k, sn_n);
      emit(j, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
