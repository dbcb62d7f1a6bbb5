#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "swmhd/cli.hpp"
#include "swmhd/errors.hpp"

namespace swmhd {

namespace {

namespace fs = std::filesystem;

void write_fields(const fs::path& file, const Grid& grid) {
  std::ofstream os(file);
  if (!os) throw ConfigError("cannot write " + file.string());
  const bool two_d = grid.dims() == 2;
  os << (two_d ? "x,y," : "x,") << "h,vx,vy,Bx,By,b\n";
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const PrimitiveState w = cons_to_prim(grid.cons(i, j));
      os << format_double(grid.x(i)) << ',';
      if (two_d) os << format_double(grid.y(j)) << ',';
      os << format_double(w.h) << ',' << format_double(w.vx) << ',' << format_double(w.vy) << ','
         << format_double(w.bx) << ',' << format_double(w.by) << ','
         << format_double(grid.topo(i, j)) << '\n';
    }
}

void write_entropy(const fs::path& file, const EntropyTrace& tr) {
  std::ofstream os(file);
  if (!os) throw ConfigError("cannot write " + file.string());
  os << "t,total_entropy\n";
  for (std::size_t n = 0; n < tr.times.size(); ++n)
    os << format_double(tr.times[n]) << ',' << format_double(tr.total_entropy[n]) << '\n';
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

// Runs job(i) for i in [0, n) on up to `threads` workers. The first exception
// is rethrown after all workers finish.
template <class Job>
void fan_out(std::size_t n, int threads, Job&& job) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!first) first = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace

RunSummary cmd_run(RunConfig cfg) {
  const ProblemSpec& problem = resolve(cfg);
  ensure_dir(cfg.out);

  RunSummary s;
  s.problem = problem.name;
  s.scheme = to_string(cfg.scheme.variant);
  s.nx = cfg.nx;
  s.ny = cfg.ny;

  const auto start = std::chrono::steady_clock::now();
  Grid grid = make_grid(problem, cfg.nx, cfg.ny);
  const int every = cfg.output_every;
  StepObserver obs = [&](const Grid& g, const StepRecord& rec) {
    if (rec.step == 0 || (every > 0 && rec.step % every == 0))
      write_fields(cfg.out / ("fields_" + format_double(rec.t) + ".csv"), g);
  };
  const RunResult res = run(std::move(grid), cfg.scheme, cfg.t_end, obs);
  s.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_fields(cfg.out / ("fields_" + format_double(res.t) + ".csv"), res.grid);
  write_entropy(cfg.out / "entropy.csv", res.entropy);

  s.steps = static_cast<long>(res.steps.size());
  s.t = res.t;
  s.min_h = res.grid.min_height();
  s.initial_entropy = res.entropy.total_entropy.front();
  s.final_entropy = res.entropy.total_entropy.back();
  if (problem.exact) {
    s.has_errors = true;
    for (Field f : {Field::h, Field::vx, Field::vy, Field::bx, Field::by})
      s.errors[to_string(f)] = solution_error(res.grid, problem, res.t, f);
  }

  nlohmann::ordered_json j;
  j["problem"] = s.problem;
  j["scheme"] = s.scheme;
  j["p"] = cfg.scheme.p;
  j["k"] = cfg.scheme.k;
  j["mu"] = cfg.scheme.mu;
  j["dt_rule"] = to_string(cfg.scheme.dt_rule);
  j["nx"] = s.nx;
  j["ny"] = s.ny;
  j["t_end"] = s.t;
  j["steps"] = s.steps;
  j["wall_seconds"] = s.wall_seconds;
  j["min_h"] = s.min_h;
  j["initial_entropy"] = s.initial_entropy;
  j["final_entropy"] = s.final_entropy;
  if (s.has_errors) {
    for (const auto& [name, e] : s.errors) {
      j["errors"][name]["l1"] = e.l1;
      j["errors"][name]["linf"] = e.linf;
    }
  }
  std::ofstream os(cfg.out / "run.json");
  if (!os) throw ConfigError("cannot write run.json in " + cfg.out.string());
  os << j.dump(2) << '\n';
  return s;
}

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& problem,
                                              const std::vector<int>& resolutions,
                                              SchemeConfig scheme, double t_end, int threads) {
  if (!problem.exact) throw ConfigError("problem '" + problem.name + "' has no exact solution");
  if (resolutions.empty()) throw ConfigError("no resolutions given");
  for (int n : resolutions)
    if (n <= 0) throw ConfigError("resolutions must be positive");
  scheme = problem_config(problem, scheme);
  validate(scheme);
  const double t = t_end >= 0.0 ? t_end : problem.t_end;

  std::vector<ConvergenceRow> rows(resolutions.size());
  fan_out(resolutions.size(), threads, [&](std::size_t i) {
    const int n = resolutions[i];
    const RunResult res = run(make_grid(problem, n, n), scheme, t);
    const ErrorNorms e = solution_error(res.grid, problem, res.t, problem.error_field);
    rows[i] = {n, e.l1, 0.0, e.linf, 0.0};
  });
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      rows[i].l1_order = rows[i].linf_order = nan;
      continue;
    }
    const double ratio = std::log2(static_cast<double>(rows[i].n) / rows[i - 1].n);
    rows[i].l1_order = std::log2(rows[i - 1].l1 / rows[i].l1) / ratio;
    rows[i].linf_order = std::log2(rows[i - 1].linf / rows[i].linf) / ratio;
  }
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "N,l1_error,l1_order,linf_error,linf_order\n";
  for (const auto& r : rows) {
    auto order = [](double o) { return std::isfinite(o) ? format_double(o) : std::string("-"); };
    os << r.n << ',' << format_double(r.l1) << ',' << order(r.l1_order) << ','
       << format_double(r.linf) << ',' << order(r.linf_order) << '\n';
  }
}

std::vector<ConvergenceRow> cmd_convergence(const std::string& problem,
                                            const std::vector<int>& resolutions,
                                            const SchemeConfig& scheme, const fs::path& out,
                                            double t_end, int threads) {
  const ProblemSpec& p = find_problem(problem);
  const auto rows = convergence_study(p, resolutions, scheme, t_end, threads);
  ensure_dir(out);
  const fs::path file = out / ("convergence_" + p.name + "_" + to_string(scheme.variant) + ".csv");
  std::ofstream os(file);
  if (!os) throw ConfigError("cannot write " + file.string());
  write_convergence_csv(os, rows);
  return rows;
}

std::vector<EntropyTrace> cmd_entropy_trace(const std::string& problem,
                                            const std::vector<int>& resolutions,
                                            const SchemeConfig& scheme, const fs::path& out,
                                            double t_end, int threads) {
  const ProblemSpec& p = find_problem(problem);
  if (resolutions.empty()) throw ConfigError("no resolutions given");
  for (int n : resolutions)
    if (n <= 0) throw ConfigError("resolutions must be positive");
  SchemeConfig cfg = problem_config(p, scheme);
  validate(cfg);
  const double t = t_end >= 0.0 ? t_end : p.t_end;
  ensure_dir(out);

  std::vector<EntropyTrace> traces(resolutions.size());
  fan_out(resolutions.size(), threads, [&](std::size_t i) {
    const int n = resolutions[i];
    traces[i] = run(make_grid(p, n, n), cfg, t).entropy;
    write_entropy(out / ("entropy_" + std::to_string(n) + ".csv"), traces[i]);
  });
  return traces;
}

void cmd_list_problems(std::ostream& os) {
  for (const auto& p : registry()) {
    os << p.name << "  (" << p.dims << "D, t_end=" << format_double(p.t_end)
       << ", g=" << format_double(p.g) << ", " << to_string(p.bc)
       << (p.exact ? ", exact" : "") << ")\n    " << p.description << '\n';
  }
}

int thread_cap_from_env() {
  const char* v = std::getenv("SWMHD_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError(std::string("bad SWMHD_THREADS value '") + v + "'");
  return static_cast<int>(std::min<long>(n, 256));
}

}  // namespace swmhd
