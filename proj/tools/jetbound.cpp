// jetbound: effective degree bounds for invariant jet differentials.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jetbound/commands.hpp"
#include "jetbound/errors.hpp"

namespace {

struct Options {
  int dim = 2;
  int order = 2;
  std::string geometry = "log";
  std::string weights;
  std::string format = "text";
  unsigned threads = 1;
  std::size_t budget = 32;
  int table_max = 5;
  bool no_cache = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim,-n", o.dim, "Base dimension n");
  cmd->add_option("--order,-k", o.order, "Jet order k");
  cmd->add_option("--geometry,-g", o.geometry, "log or compact")->check(CLI::IsMember({"log", "compact"}));
  cmd->add_option("--weights,-w", o.weights, "Comma separated weights a1,..,ak (default 2*3^(k-2),..,6,2,1)");
  cmd->add_option("--format,-f", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--threads,-t", o.threads, "Worker threads for table and sweep")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-cache", o.no_cache, "Do not read or write the report cache");
}

jetbound::RunConfig to_config(const Options& o) {
  jetbound::RunConfig cfg;
  cfg.n = o.dim;
  cfg.k = o.order;
  cfg.geometry = *jetbound::parse_geometry(o.geometry);
  if (!o.weights.empty()) cfg.weights = jetbound::WeightVector::parse(o.weights);
  cfg.format = *jetbound::parse_format(o.format);
  cfg.threads = o.threads;
  cfg.sweep_budget = o.budget;
  cfg.table_max = o.table_max;
  if (!o.no_cache) cfg.cache_dir = jetbound::ReportCache::default_dir();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective degree thresholds from algebraic Morse inequalities on Demailly-Semple towers"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Morse polynomial and degree threshold for one (n, k)");
  auto* table = app.add_subcommand("table", "Thresholds for all 2 <= n <= k <= max");
  auto* poly = app.add_subcommand("poly", "Print the Morse polynomial P(d)");
  auto* sweep = app.add_subcommand("sweep", "Search admissible weights for the smallest threshold");
  auto* verify = app.add_subcommand("verify", "Run the intersection-number checks for n <= 3");
  for (auto* cmd : {bound, table, poly, sweep, verify}) add_common(cmd, o);
  table->add_option("--max", o.table_max, "Largest n and k in the table")->check(CLI::Range(2, 9));
  sweep->add_option("--budget,-b", o.budget, "Number of weight vectors to evaluate")->check(CLI::PositiveNumber);
  verify->get_option("--dim")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jetbound::kExitInvalidInput;
  }

  try {
    const jetbound::RunConfig cfg = to_config(o);
    jetbound::CommandResult result;
    if (*bound) {
      result = jetbound::run_bound(cfg, std::cout);
    } else if (*table) {
      result = jetbound::run_table(cfg, std::cout);
    } else if (*poly) {
      result = jetbound::run_poly(cfg, std::cout);
    } else if (*sweep) {
      result = jetbound::run_sweep(cfg, std::cout);
    } else {
      result = jetbound::run_verify(cfg, std::cout);
    }
    if (result.exit_code == jetbound::kExitNoThreshold) std::cerr << "no threshold: leading coefficient <= 0\n";
    return result.exit_code;
  } catch (const jetbound::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return jetbound::kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return jetbound::kExitInternal;
  }
}
