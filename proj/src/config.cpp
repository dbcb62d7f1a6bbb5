#include <charconv>
#include <fstream>
#include <sstream>

#include "swmhd/cli.hpp"
#include "swmhd/errors.hpp"

namespace swmhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ConfigError("bad value for '" + key + "': '" + v + "'");
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, v] : kv) {
    if (key == "problem") cfg.problem = v;
    else if (key == "nx") cfg.nx = parse_number<int>(key, v);
    else if (key == "ny") cfg.ny = parse_number<int>(key, v);
    else if (key == "scheme") cfg.scheme.variant = parse_variant(v);
    else if (key == "p") cfg.scheme.p = parse_number<int>(key, v);
    else if (key == "k") cfg.scheme.k = parse_number<int>(key, v);
    else if (key == "mu") cfg.scheme.mu = parse_number<double>(key, v);
    else if (key == "t_end") cfg.t_end = parse_number<double>(key, v);
    else if (key == "out") cfg.out = v;
    else if (key == "dt_rule") cfg.scheme.dt_rule = parse_dt_rule(v);
    else if (key == "eps") cfg.scheme.eps = parse_number<double>(key, v);
    else if (key == "output_every") cfg.output_every = parse_number<int>(key, v);
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig load_run_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  RunConfig cfg;
  apply_key_values(cfg, parse_key_values(ss.str()));
  return cfg;
}

const ProblemSpec& resolve(RunConfig& cfg) {
  if (cfg.problem.empty()) throw ConfigError("no problem given");
  const ProblemSpec& p = find_problem(cfg.problem);
  if (cfg.nx < 0 || cfg.ny < 0) throw ConfigError("resolutions must be positive");
  if (cfg.nx == 0) cfg.nx = p.default_nx;
  if (p.dims == 1) cfg.ny = 1;
  else if (cfg.ny == 0) cfg.ny = cfg.nx;
  if (cfg.t_end < 0.0) cfg.t_end = p.t_end;
  if (cfg.output_every < 0) throw ConfigError("output_every must be >= 0");
  cfg.scheme = problem_config(p, cfg.scheme);
  validate(cfg.scheme);
  return p;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace swmhd
