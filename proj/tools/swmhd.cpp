// swmhd: command-line driver.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swmhd/cli.hpp"
#include "swmhd/errors.hpp"

namespace {

struct Flags {
  std::string problem;
  int nx = 0, ny = 0;
  std::string scheme;
  int p = 0, k = 0;
  double mu = -1.0;
  double t_end = -1.0;
  std::string out;
  std::string dt_rule;
  int output_every = -1;
};

void add_common(CLI::App* app, Flags& f, bool single_run) {
  app->add_option("--problem", f.problem, "problem name (see list-problems)");
  if (single_run) {
    app->add_option("--nx", f.nx, "cells in x");
    app->add_option("--ny", f.ny, "cells in y (2D)");
    app->add_option("--output-every", f.output_every, "dump fields every N steps");
  }
  app->add_option("--scheme", f.scheme, "ec | es | es-pp | lf");
  app->add_option("--p", f.p, "EC half order (1..3)");
  app->add_option("--k", f.k, "ES order (5)");
  app->add_option("--mu", f.mu, "CFL number");
  app->add_option("--t-end", f.t_end, "final time");
  app->add_option("--out", f.out, "output directory");
  app->add_option("--dt-rule", f.dt_rule, "standard | accuracy");
}

// Flags override the config file.
std::map<std::string, std::string> overrides(const Flags& f) {
  std::map<std::string, std::string> kv;
  if (!f.problem.empty()) kv["problem"] = f.problem;
  if (f.nx > 0) kv["nx"] = std::to_string(f.nx);
  if (f.ny > 0) kv["ny"] = std::to_string(f.ny);
  if (!f.scheme.empty()) kv["scheme"] = f.scheme;
  if (f.p > 0) kv["p"] = std::to_string(f.p);
  if (f.k > 0) kv["k"] = std::to_string(f.k);
  if (f.mu > 0.0) kv["mu"] = swmhd::format_double(f.mu);
  if (f.t_end >= 0.0) kv["t_end"] = swmhd::format_double(f.t_end);
  if (!f.out.empty()) kv["out"] = f.out;
  if (!f.dt_rule.empty()) kv["dt_rule"] = f.dt_rule;
  if (f.output_every >= 0) kv["output_every"] = std::to_string(f.output_every);
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order entropy stable schemes for shallow water MHD"};
  app.require_subcommand(1);

  Flags run_f;
  std::string config_file;
  auto* run_cmd = app.add_subcommand("run", "run one simulation and write CSV/JSON artifacts");
  run_cmd->add_option("config", config_file, "key=value config file");
  add_common(run_cmd, run_f, true);

  Flags conv_f;
  std::vector<int> conv_ns{10, 20, 40, 80, 160};
  auto* conv_cmd = app.add_subcommand("convergence", "error and order table against the exact solution");
  add_common(conv_cmd, conv_f, false);
  conv_cmd->add_option("--resolutions,-N", conv_ns, "resolutions")->delimiter(',');

  Flags ent_f;
  std::vector<int> ent_ns{100, 200};
  auto* ent_cmd = app.add_subcommand("entropy-trace", "total entropy history per resolution");
  add_common(ent_cmd, ent_f, false);
  ent_cmd->add_option("--resolutions,-N", ent_ns, "resolutions")->delimiter(',');

  app.add_subcommand("list-problems", "list registered problems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-problems")) {
      swmhd::cmd_list_problems(std::cout);
      return 0;
    }
    if (run_cmd->parsed()) {
      swmhd::RunConfig cfg = config_file.empty() ? swmhd::RunConfig{} : swmhd::load_run_config(config_file);
      swmhd::apply_key_values(cfg, overrides(run_f));
      const auto s = swmhd::cmd_run(cfg);
      std::cout << s.problem << ' ' << s.scheme << ' ' << s.nx << 'x' << s.ny << ": " << s.steps
                << " steps to t=" << swmhd::format_double(s.t) << ", min h "
                << swmhd::format_double(s.min_h) << ", entropy "
                << swmhd::format_double(s.final_entropy) << '\n';
      for (const auto& [name, e] : s.errors)
        std::cout << "  " << name << ": l1 " << swmhd::format_double(e.l1) << "  linf "
                  << swmhd::format_double(e.linf) << '\n';
      return 0;
    }

    const bool conv = conv_cmd->parsed();
    Flags& f = conv ? conv_f : ent_f;
    swmhd::RunConfig cfg;
    if (conv) cfg.scheme.dt_rule = swmhd::DtRule::accuracy_test;
    swmhd::apply_key_values(cfg, overrides(f));
    if (cfg.problem.empty()) throw swmhd::ConfigError("--problem is required");
    const int threads = swmhd::thread_cap_from_env();
    if (conv) {
      const auto rows = swmhd::cmd_convergence(cfg.problem, conv_ns, cfg.scheme, cfg.out, cfg.t_end, threads);
      swmhd::write_convergence_csv(std::cout, rows);
    } else {
      swmhd::cmd_entropy_trace(cfg.problem, ent_ns, cfg.scheme, cfg.out, cfg.t_end, threads);
      for (int n : ent_ns) std::cout << (cfg.out / ("entropy_" + std::to_string(n) + ".csv")).string() << '\n';
    }
    return 0;
  } catch (const swmhd::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const swmhd::SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
