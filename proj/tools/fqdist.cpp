// fqdist: batch experiments on distance statistics of point sets in F_q^d.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fqdist/cli.hpp"

namespace {

using fqdist::cli::RunConfig;
using fqdist::cli::SetSource;

void add_field_options(CLI::App* app, RunConfig& cfg, bool with_dim = true) {
  app->add_option("--p", cfg.p, "characteristic (odd prime)")->required();
  app->add_option("--ell", cfg.ell, "extension degree")->capture_default_str();
  if (with_dim) app->add_option("--d", cfg.d, "dimension")->capture_default_str();
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->capture_default_str();
  app->add_option("--out", cfg.output, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance statistics of point sets over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fqdist::cli::kVersion);

  RunConfig cfg;
  SetSource src;
  std::string format = "json";
  std::string kernel_cache;

  auto* gauss = app.add_subcommand("gauss", "Gauss sum: direct vs closed form, sign table");
  add_field_options(gauss, cfg, false);
  add_common(gauss, cfg);

  auto* verify = app.add_subcommand("verify", "Seeded sweep of exact identities and bounds");
  add_field_options(verify, cfg);
  add_common(verify, cfg);
  verify->add_option("--trials", cfg.trials, "number of random sets")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "base seed; trial t uses seed + t")->capture_default_str();
  verify->add_option("--size-min", cfg.size_min)->capture_default_str();
  verify->add_option("--size-max", cfg.size_max, "0 means q^d")->capture_default_str();
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--kernel-cache", kernel_cache, "directory for kernel tables");

  auto* analyze = app.add_subcommand("analyze", "Full report for one point set");
  analyze->add_option("--set", src.file, "point-set file");
  analyze->add_option("--p", cfg.p);
  analyze->add_option("--ell", cfg.ell);
  analyze->add_option("--d", cfg.d);
  analyze->add_option("--kind", src.kind)
      ->check(CLI::IsMember({"random", "line", "subspace", "sphere", "full", "lift"}));
  analyze->add_option("--size", src.size);
  analyze->add_option("--seed", src.seed);
  analyze->add_option("--offset", src.offset, "x1,...,xd");
  analyze->add_option("--direction", src.direction, "x1,...,xd");
  analyze->add_option("--basis", src.basis, "v1;v2;... with comma-separated entries");
  analyze->add_option("--radius", src.radius, "element index");
  analyze->add_option("--source", src.file, "base set for --kind lift");
  analyze->add_option("--kernel-cache", kernel_cache, "directory for kernel tables");
  add_common(analyze, cfg);

  auto* search = app.add_subcommand("search-square", "Search for large square-distance sets");
  add_field_options(search, cfg);
  add_common(search, cfg);
  search->add_option("--strategy", cfg.strategy)
      ->check(CLI::IsMember({"greedy", "exhaustive"}))
      ->capture_default_str();
  search->add_option("--seed", cfg.seed)->capture_default_str();
  search->add_option("--restarts", cfg.restarts)->capture_default_str();
  search->add_option("--node-budget", cfg.node_budget)->capture_default_str();
  search->add_option("--witness", cfg.witness, "write the best set here");

  auto* coverage = app.add_subcommand("coverage", "Distance-set coverage of random sets");
  add_field_options(coverage, cfg);
  add_common(coverage, cfg);
  coverage->add_option("--size", cfg.size)->required();
  coverage->add_option("--seeds", cfg.seeds, "one run per seed")->delimiter(',');
  coverage->add_option("--seed", cfg.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "csv" ? fqdist::cli::Format::Csv : fqdist::cli::Format::Json;
  if (!kernel_cache.empty()) cfg.kernel_cache = kernel_cache;
  if (cfg.command == "analyze") {
    if (analyze->count("--set") > 0) {
      src.kind = "file";
    } else if (analyze->count("--kind") == 0) {
      std::cerr << "analyze: pass --set FILE or --kind with generator options\n";
      return 1;
    }
    cfg.source = src;
  }

  const fqdist::cli::CommandResult result = fqdist::cli::run(cfg);
  const std::string text =
      cfg.format == fqdist::cli::Format::Csv ? result.csv : result.report.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out || !(out << text)) {
      std::cerr << "cannot write " << cfg.output->string() << '\n';
      return 1;
    }
  } else {
    std::cout << text;
  }
  if (result.exit_code != 0 && result.report.contains("error")) {
    std::cerr << result.report["error"]["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
