#pragma once
// Run configuration, artifact writers and the subcommand implementations
// behind the swmhd executable.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "swmhd/problems.hpp"
#include "swmhd/solver.hpp"

namespace swmhd {

struct RunConfig {
  std::string problem;
  int nx = 0;  // 0: problem default
  int ny = 0;
  SchemeConfig scheme;
  double t_end = -1.0;  // < 0: problem default
  std::filesystem::path out = ".";
  int output_every = 0;  // field dump cadence in steps; 0 dumps initial and final only
};

/// Parses flat key=value text. '#' starts a comment; blank lines are ignored.
/// Unknown keys and malformed values throw ConfigError.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Applies key/value pairs onto cfg. Keys: problem, nx, ny, scheme, p, k, mu,
/// t_end, out, dt_rule, eps, output_every.
void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv);

RunConfig load_run_config(const std::filesystem::path& file);

/// Checks the problem name and resolutions; fills problem defaults for g, bc,
/// nx, ny and t_end. Returns the resolved problem.
const ProblemSpec& resolve(RunConfig& cfg);

/// Shortest round-trip decimal.
std::string format_double(double v);

struct RunSummary {
  std::string problem;
  std::string scheme;
  int nx = 0, ny = 0;
  long steps = 0;
  double t = 0.0;
  double wall_seconds = 0.0;
  double min_h = 0.0;
  double initial_entropy = 0.0;
  double final_entropy = 0.0;
  bool has_errors = false;
  std::map<std::string, ErrorNorms> errors;  // keyed by field name
};

/// Runs one configuration and writes fields_<t>.csv, entropy.csv and
/// run.json into cfg.out.
RunSummary cmd_run(RunConfig cfg);

struct ConvergenceRow {
  int n = 0;
  double l1 = 0.0;
  double l1_order = 0.0;  // NaN for the first row
  double linf = 0.0;
  double linf_order = 0.0;
};

/// Runs the problem at each resolution (square grids in 2D) and measures the
/// error of its error field against the exact solution. Independent runs are
/// spread over up to `threads` workers.
std::vector<ConvergenceRow> convergence_study(const ProblemSpec& problem,
                                              const std::vector<int>& resolutions,
                                              SchemeConfig scheme, double t_end = -1.0,
                                              int threads = 1);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

/// Convergence table into out/convergence_<problem>_<scheme>.csv; returns the rows.
std::vector<ConvergenceRow> cmd_convergence(const std::string& problem,
                                            const std::vector<int>& resolutions,
                                            const SchemeConfig& scheme,
                                            const std::filesystem::path& out,
                                            double t_end = -1.0, int threads = 1);

/// One entropy_<N>.csv per resolution in out; returns the traces.
std::vector<EntropyTrace> cmd_entropy_trace(const std::string& problem,
                                            const std::vector<int>& resolutions,
                                            const SchemeConfig& scheme,
                                            const std::filesystem::path& out,
                                            double t_end = -1.0, int threads = 1);

void cmd_list_problems(std::ostream& os);

/// Worker cap from SWMHD_THREADS (default 1).
int thread_cap_from_env();

}  // namespace swmhd
