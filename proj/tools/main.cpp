// Command-line front end: every library capability behind one binary with
// CSV/JSON output suitable for scripting and plotting.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclemix/asymptotics.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/mixing.hpp"
#include "cyclemix/partition.hpp"
#include "cyclemix/verify.hpp"
#include "cyclemix/walk_sim.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cyclemix;

std::string format6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

double rounded6(double x) { return std::stod(format6(x)); }

ordered_json rat_json(const Rat& q) {
  return ordered_json{{"rational", rat_string(q)}, {"value", rounded6(to_double(q))}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output path: " + out_path);
    out << text;
  }
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

int default_workers() {
  if (const char* env = std::getenv("CYCLEMIX_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

struct CommonCaps {
  int table_cap = 14;
  double general_budget = 1e8;
};

struct CharRatioCmd {
  int n = 0, k = 0;
  std::string lambda_text;
  std::string method = "residue";
  std::string format = "text", out;

  int run(const CommonCaps& caps) const {
    const Partition lambda = Partition::parse(lambda_text);
    if (lambda.n() != n)
      throw CLI::ValidationError("--lambda must be a partition of --n");
    Rat ratio;
    if (method == "residue") {
      ratio = char_ratio_kcycle(lambda, k);
    } else {
      const CycleType C = CycleType::k_cycle(n, k);
      const Int chi = (method == "mn")
                          ? char_mn_oracle(lambda, C)
                          : char_general(lambda, C, {.budget = caps.general_budget});
      ratio = make_rat(chi, dimension(lambda));
    }
    if (format == "json") {
      ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["lambda"] = lambda.to_string();
      j["method"] = method;
      j["ratio"] = rat_json(ratio);
      j["dimension"] = dimension(lambda).get_str();
      j["frobenius"] = to_frobenius(lambda).to_string();
      emit_json(j, out);
    } else {
      emit(rat_string(ratio) + "\n", out);
    }
    return 0;
  }
};

struct CharTableCmd {
  int n = 0;
  std::string format = "csv", out;
  int workers = default_workers();
  bool unsafe_caps = false;

  int run(const CommonCaps& caps) const {
    const CharacterTable table =
        character_table(n, unsafe_caps ? 64 : caps.table_cap, workers);
    if (format == "json")
      emit_json(table.to_json(), out);
    else
      emit(table.to_csv(), out);
    return 0;
  }
};

struct AsymCmd {
  int n = 0, k = 0;
  std::string lambda_text;
  bool all = false;
  std::string format = "csv", out;

  void fill_row(ordered_json& row, const Partition& lambda,
                const AsymptoticConfig& cfg) const {
    const RatioEstimate est = estimate_ratio(lambda, k, cfg);
    row["lambda"] = lambda.to_string();
    row["frobenius"] = to_frobenius(lambda).to_string();
    row["regime"] = regime_name(est.regime);
    row["sign"] = est.sign;
    row["log_main_term"] = rounded6(est.log_main_term);
    row["log_error_bound"] = rounded6(est.log_error_bound);
    if (n <= cfg.exact_cutoff) {
      const Rat exact = char_ratio_kcycle(lambda, k);
      row["exact_ratio"] = rat_json(exact);
      row["log_exact_ratio"] =
          exact == 0 ? rounded6(-std::numeric_limits<double>::infinity())
                     : rounded6(std::log(std::abs(to_double(exact))));
    }
  }

  int run() const {
    const AsymptoticConfig cfg;
    std::vector<Partition> lambdas;
    if (all) {
      lambdas = all_partitions(n);
    } else {
      if (lambda_text.empty())
        throw CLI::ValidationError("asym needs --lambda or --all");
      lambdas.push_back(Partition::parse(lambda_text));
      if (lambdas[0].n() != n) throw CLI::ValidationError("--lambda must be a partition of --n");
    }
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& lambda : lambdas) {
        ordered_json row;
        fill_row(row, lambda, cfg);
        arr.push_back(std::move(row));
      }
      ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["rows"] = std::move(arr);
      emit_json(j, out);
    } else {
      std::string csv = "lambda,regime,sign,log_main_term,log_error_bound,log_exact_ratio\n";
      for (const auto& lambda : lambdas) {
        const RatioEstimate est = estimate_ratio(lambda, k, cfg);
        csv += "\"" + lambda.to_string() + "\"," + regime_name(est.regime) + "," +
               std::to_string(est.sign) + "," + format6(est.log_main_term) + "," +
               format6(est.log_error_bound) + ",";
        if (n <= cfg.exact_cutoff) {
          const Rat exact = char_ratio_kcycle(lambda, k);
          csv += exact == 0 ? "-inf" : format6(std::log(std::abs(to_double(exact))));
        }
        csv += "\n";
      }
      emit(csv, out);
    }
    return 0;
  }
};

struct TvCmd {
  int n = 0, k = 0, t = 0;
  std::string mode = "exact";
  std::string format = "text", out;
  bool unsafe_caps = false;
  int workers = default_workers();

  int run(const CommonCaps& caps) const {
    std::optional<Rat> exact;
    double upper = 0.0;
    if (mode == "exact") {
      const CharacterTable table =
          character_table(n, unsafe_caps ? 64 : caps.table_cap, workers);
      const CycleType C = CycleType::k_cycle(n, k);
      exact = exact_tv(table, C, t);
      upper = tv_upper_bound_exact(table, C, t);
    } else if (mode == "bound") {
      upper = tv_upper_bound_regimes(n, k, t, {}, unsafe_caps ? 80 : 64);
    } else {
      throw CLI::ValidationError("--mode must be exact or bound");
    }
    if (format == "json") {
      ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["t"] = t;
      j["mode"] = mode;
      j["tv_upper"] = rounded6(upper);
      if (exact) j["tv_exact"] = rat_json(*exact);
      emit_json(j, out);
    } else {
      std::string text = "upper " + std::string(format6(upper)) + "\n";
      if (exact)
        text += "exact " + rat_string(*exact) + " (" + format6(to_double(*exact)) + ")\n";
      emit(text, out);
    }
    return 0;
  }
};

struct CutoffCmd {
  int n = 0, k = 0, t_max = 0, t_min = 0;
  std::string format = "csv", out;
  bool unsafe_caps = false;
  int workers = default_workers();

  int run(const CommonCaps& caps) const {
    const CharacterTable table =
        character_table(n, unsafe_caps ? 64 : caps.table_cap, workers);
    const CycleType C = CycleType::k_cycle(n, k);
    const auto rows = cutoff_scan(table, C, t_min, t_max);
    if (format == "json") {
      ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["rows"] = cutoff_json(rows);
      emit_json(j, out);
    } else {
      emit(cutoff_csv(rows), out);
    }
    return 0;
  }
};

struct LowerBoundCmd {
  int n = 0, k = 0, j = 0, t = 0;
  std::string format = "text", out;

  int run() const {
    const double bound = tv_lower_bound(n, k, j, t);
    const MomentReport m = moments_fixed_points(n, k, j, t);
    if (format == "json") {
      ordered_json jj;
      jj["n"] = n;
      jj["k"] = k;
      jj["j"] = j;
      jj["t"] = t;
      jj["tv_lower"] = rounded6(bound);
      jj["mean"] = rat_json(m.mean);
      jj["second_moment"] = rat_json(m.second_moment);
      jj["variance"] = rat_json(m.variance);
      emit_json(jj, out);
    } else {
      emit(std::string(format6(bound)) + "\n", out);
    }
    return 0;
  }
};

struct SimulateCmd {
  WalkConfig cfg;
  std::string format = "csv", out;
  bool unsafe_caps = false;
  CommonCaps caps;

  int run() const {
    const ClassHistogram hist = run_walk(cfg);
    const int coset_sign = (cfg.k % 2 == 0 && cfg.t % 2 == 1) ? -1 : 1;
    const double tv_coset = empirical_tv_to_coset_uniform(hist, coset_sign);
    std::optional<double> tv_exact;
    const int table_cap = unsafe_caps ? 64 : caps.table_cap;
    if (cfg.n <= table_cap) {
      const CharacterTable table = character_table(cfg.n, table_cap);
      const ClassDistribution ref =
          exact_distribution(table, CycleType::k_cycle(cfg.n, cfg.k), cfg.t);
      tv_exact = empirical_tv(hist, ref);
    }
    if (format == "json") {
      ordered_json j = hist.to_json();
      j["k"] = cfg.k;
      j["t"] = cfg.t;
      j["seed"] = cfg.seed;
      j["workers"] = cfg.workers;
      j["tv_to_coset_uniform"] = rounded6(tv_coset);
      if (tv_exact) j["tv_to_exact"] = rounded6(*tv_exact);
      emit_json(j, out);
    } else {
      std::string text = hist.to_csv();
      text += "# tv_to_coset_uniform," + std::string(format6(tv_coset)) + "\n";
      if (tv_exact) text += "# tv_to_exact," + std::string(format6(*tv_exact)) + "\n";
      emit(text, out);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetric-group character ratios and k-cycle walk mixing"};
  app.require_subcommand(1);

  CommonCaps caps;
  bool unsafe = false;
  app.add_flag("--unsafe-caps", unsafe,
               "lift the default caps (table n <= 14, tuple budget 1e8)");
  app.set_config("--config", "",
                 "read options from an INI file; walk flags go under [simulate]");

  CharRatioCmd ratio_cmd;
  auto* ratio = app.add_subcommand("char-ratio", "exact character ratio at a k-cycle class");
  ratio->add_option("--n", ratio_cmd.n)->required();
  ratio->add_option("--k", ratio_cmd.k)->required();
  ratio->add_option("--lambda", ratio_cmd.lambda_text, "partition, e.g. 4,1")->required();
  ratio->add_option("--method", ratio_cmd.method)
      ->check(CLI::IsMember({"residue", "mn", "general"}));
  ratio->add_option("--format", ratio_cmd.format)->check(CLI::IsMember({"text", "json"}));
  ratio->add_option("--out", ratio_cmd.out);

  CharTableCmd table_cmd;
  auto* table = app.add_subcommand("char-table", "full character table of S_n");
  table->add_option("--n", table_cmd.n)->required();
  table->add_option("--format", table_cmd.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_cmd.out);
  table->add_option("--workers", table_cmd.workers);

  AsymCmd asym_cmd;
  auto* asym = app.add_subcommand("asym", "regime-dispatched ratio estimates");
  asym->add_option("--n", asym_cmd.n)->required();
  asym->add_option("--k", asym_cmd.k)->required();
  asym->add_option("--lambda", asym_cmd.lambda_text);
  asym->add_flag("--all", asym_cmd.all, "every partition of n");
  asym->add_option("--format", asym_cmd.format)->check(CLI::IsMember({"csv", "json"}));
  asym->add_option("--out", asym_cmd.out);

  TvCmd tv_cmd;
  auto* tv = app.add_subcommand("tv", "total variation distance to the coset-uniform law");
  tv->add_option("--n", tv_cmd.n)->required();
  tv->add_option("--k", tv_cmd.k)->required();
  tv->add_option("--t", tv_cmd.t)->required();
  tv->add_option("--mode", tv_cmd.mode)->check(CLI::IsMember({"exact", "bound"}));
  tv->add_option("--format", tv_cmd.format)->check(CLI::IsMember({"text", "json"}));
  tv->add_option("--out", tv_cmd.out);
  tv->add_option("--workers", tv_cmd.workers);

  CutoffCmd cutoff_cmd;
  auto* cutoff = app.add_subcommand("cutoff", "TV profile across step counts");
  cutoff->add_option("--n", cutoff_cmd.n)->required();
  cutoff->add_option("--k", cutoff_cmd.k)->required();
  cutoff->add_option("--t-max", cutoff_cmd.t_max)->required();
  cutoff->add_option("--t-min", cutoff_cmd.t_min);
  cutoff->add_option("--format", cutoff_cmd.format)->check(CLI::IsMember({"csv", "json"}));
  cutoff->add_option("--out", cutoff_cmd.out);
  cutoff->add_option("--workers", cutoff_cmd.workers);

  LowerBoundCmd lower_cmd;
  auto* lower = app.add_subcommand("lower-bound", "second-moment TV lower bound");
  lower->add_option("--n", lower_cmd.n)->required();
  lower->add_option("--k", lower_cmd.k)->required();
  lower->add_option("--j", lower_cmd.j)->required();
  lower->add_option("--t", lower_cmd.t)->required();
  lower->add_option("--format", lower_cmd.format)->check(CLI::IsMember({"text", "json"}));
  lower->add_option("--out", lower_cmd.out);

  SimulateCmd sim_cmd;
  sim_cmd.cfg.workers = default_workers();
  auto* sim = app.add_subcommand("simulate", "Monte Carlo walk with class histogram");
  sim->add_option("--n", sim_cmd.cfg.n)->required();
  sim->add_option("--k", sim_cmd.cfg.k)->required();
  sim->add_option("--t", sim_cmd.cfg.t)->required();
  sim->add_option("--samples", sim_cmd.cfg.samples)->required();
  sim->add_option("--seed", sim_cmd.cfg.seed);
  sim->add_option("--workers", sim_cmd.cfg.workers);
  sim->add_flag("--check-parity", sim_cmd.cfg.check_parity);
  sim->add_option("--format", sim_cmd.format)->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--out", sim_cmd.out);

  std::string suite_name;
  int suite_n_max = -1;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  verify->add_option("--suite", suite_name)->required();
  verify->add_option("--n-max", suite_n_max);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (unsafe) {
    caps.table_cap = 64;
    caps.general_budget = 1e18;
  }

  try {
    if (*ratio) return ratio_cmd.run(caps);
    if (*table) {
      table_cmd.unsafe_caps = unsafe;
      return table_cmd.run(caps);
    }
    if (*asym) return asym_cmd.run();
    if (*tv) {
      tv_cmd.unsafe_caps = unsafe;
      return tv_cmd.run(caps);
    }
    if (*cutoff) {
      cutoff_cmd.unsafe_caps = unsafe;
      return cutoff_cmd.run(caps);
    }
    if (*lower) return lower_cmd.run();
    if (*sim) {
      sim_cmd.unsafe_caps = unsafe;
      sim_cmd.caps = caps;
      return sim_cmd.run();
    }
    if (*verify) {
      if (verify_format == "json") {
        std::ostringstream sink;
        const SuiteResult result = run_suite(suite_name, suite_n_max, sink);
        ordered_json j;
        j["suite"] = suite_name;
        j["passed"] = result.passed;
        j["failed"] = result.failed;
        j["failures"] = result.failures;
        std::cout << j.dump(2) << "\n";
        return result.ok() ? 0 : 1;
      }
      const SuiteResult result = run_suite(suite_name, suite_n_max, std::cout);
      std::cout << "suite " << suite_name << ": " << result.passed << " passed, "
                << result.failed << " failed\n";
      return result.ok() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
