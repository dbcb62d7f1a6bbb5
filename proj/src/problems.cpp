#include "swmhd/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "swmhd/errors.hpp"

namespace swmhd {

std::string to_string(Field f) {
  switch (f) {
    case Field::h: return "h";
    case Field::vx: return "vx";
    case Field::vy: return "vy";
    case Field::bx: return "Bx";
    case Field::by: return "By";
  }
  return "?";
}

double field_value(const PrimitiveState& w, Field f) {
  switch (f) {
    case Field::h: return w.h;
    case Field::vx: return w.vx;
    case Field::vy: return w.vy;
    case Field::bx: return w.bx;
    case Field::by: return w.by;
  }
  return 0.0;
}

double vortex_hmax_for_core(double core, const VortexParams& vp) {
  return core + (vp.v_max * vp.v_max - vp.b_max * vp.b_max) * std::numbers::e / (2.0 * vp.g);
}

PrimitiveState vortex_steady(double x, double y, const VortexParams& vp) {
  const double r2 = x * x + y * y;
  const double env = std::exp(0.5 * (1.0 - r2));
  const double h =
      vp.h_max - (vp.v_max * vp.v_max - vp.b_max * vp.b_max) * env * env / (2.0 * vp.g);
  return {h, -vp.v_max * env * y, vp.v_max * env * x, -vp.b_max * env * y, vp.b_max * env * x};
}

namespace {

double wrap(double x, double lo, double hi) {
  const double len = hi - lo;
  double r = std::fmod(x - lo, len);
  if (r < 0.0) r += len;
  return lo + r;
}

}  // namespace

PrimitiveState vortex_exact(double x, double y, double t, const VortexParams& vp) {
  // The steady profile is evaluated at the nearest periodic image of the
  // vortex centre.
  const double xs = wrap(x - t, vp.x0, vp.x1);
  const double ys = wrap(y - t, vp.y0, vp.y1);
  PrimitiveState w = vortex_steady(xs, ys, vp);
  w.vx += 1.0;
  w.vy += 1.0;
  return w;
}

namespace {

constexpr double kPi = std::numbers::pi;

double zero_topo(double, double) { return 0.0; }

double wb1d_smooth_b(double x) {
  return 0.2 * std::exp(-(x + 1.0) * (x + 1.0) / 2.0) + 0.3 * std::exp(-(x - 1.5) * (x - 1.5));
}

double wb1d_disc_b(double x) { return (x >= -4.0 && x <= 4.0) ? 0.5 : 0.0; }

double hump_b(double x) {
  return (x > 1.4 && x < 1.6) ? 0.25 * (std::cos(10.0 * kPi * (x - 1.5)) + 1.0) : 0.0;
}

double wb2d_smooth_b(double x, double y) {
  return 0.8 * std::exp(-5.0 * (x - 0.9) * (x - 0.9) - 50.0 * (y - 0.5) * (y - 0.5));
}

double wb2d_disc_b(double x, double y) {
  return (x >= 0.5 && x <= 1.5 && y >= 0.25 && y <= 0.75) ? 0.5 : 0.0;
}

ProblemSpec lake_at_rest_1d(std::string name, std::string desc, double (*b)(double)) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::move(desc);
  p.dims = 1;
  p.x0 = -10.0;
  p.x1 = 10.0;
  p.g = 1.0;
  p.bc = Boundary::outflow;
  p.t_end = 10.0;
  p.default_nx = 40;
  p.topo = [b](double x, double) { return b(x); };
  p.init = [b](double x, double) { return PrimitiveState{1.0 - b(x), 0.0, 0.0, 0.0, 0.0}; };
  p.exact = [init = p.init](double x, double y, double) { return init(x, y); };
  p.error_field = Field::h;
  return p;
}

ProblemSpec lake_at_rest_2d(std::string name, std::string desc, double (*b)(double, double)) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::move(desc);
  p.dims = 2;
  p.x0 = 0.0;
  p.x1 = 2.0;
  p.y0 = 0.0;
  p.y1 = 1.0;
  p.g = 1.0;
  p.bc = Boundary::outflow;
  p.t_end = 1.0;
  p.default_nx = 40;
  p.default_ny = 40;
  p.topo = b;
  p.init = [b](double x, double y) { return PrimitiveState{1.0 - b(x, y), 0.0, 0.0, 0.0, 0.0}; };
  p.exact = [init = p.init](double x, double y, double) { return init(x, y); };
  p.error_field = Field::h;
  return p;
}

ProblemSpec perturb_1d(std::string name, double eps, bool magnetic) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::string("small perturbation of a lake at rest over a hump, eps = ") +
                  (eps > 0.01 ? "0.2" : "0.001") + (magnetic ? ", h Bx = 1" : ", B = 0");
  p.dims = 1;
  p.x0 = 0.0;
  p.x1 = 2.0;
  p.g = 9.812;
  p.bc = Boundary::outflow;
  p.t_end = 0.2;
  p.default_nx = 200;
  p.topo = [](double x, double) { return hump_b(x); };
  p.init = [eps, magnetic](double x, double) {
    const double h = 1.0 - hump_b(x) + ((x > 1.1 && x < 1.2) ? eps : 0.0);
    return PrimitiveState{h, 0.0, 0.0, magnetic ? 1.0 / h : 0.0, 0.0};
  };
  return p;
}

ProblemSpec vortex_problem(std::string name, std::string desc, VortexParams vp) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::move(desc);
  p.dims = 2;
  p.x0 = vp.x0;
  p.x1 = vp.x1;
  p.y0 = vp.y0;
  p.y1 = vp.y1;
  p.g = vp.g;
  p.bc = Boundary::periodic;
  p.node_offset = 0.0;
  p.t_end = 16.0;
  p.default_nx = 40;
  p.default_ny = 40;
  p.topo = zero_topo;
  p.init = [vp](double x, double y) { return vortex_exact(x, y, 0.0, vp); };
  p.exact = [vp](double x, double y, double t) { return vortex_exact(x, y, t, vp); };
  p.error_field = Field::h;
  return p;
}

ProblemSpec alfven_wave(const std::string& name, double amp) {
  ProblemSpec p;
  p.name = name;
  std::ostringstream d;
  d << "smooth Alfven wave, h = 1, vy = By = ";
  if (amp != 1.0) d << amp << " ";
  d << "sin(2 pi (x + t)), Bx = 1";
  p.description = d.str();
  p.dims = 1;
  p.x0 = 0.0;
  p.x1 = 1.0;
  p.g = 1.0;
  p.bc = Boundary::periodic;
  p.node_offset = 0.0;
  p.t_end = 1.0;
  p.default_nx = 40;
  p.topo = zero_topo;
  p.exact = [amp](double x, double, double t) {
    const double s = amp * std::sin(2.0 * kPi * (x + t));
    return PrimitiveState{1.0, 0.0, s, 1.0, s};
  };
  p.init = [ex = p.exact](double x, double y) { return ex(x, y, 0.0); };
  p.error_field = Field::vy;
  return p;
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> reg;

  reg.push_back(alfven_wave("acc1d", 1.0));
  reg.push_back(alfven_wave("acc1d_small", 0.1));

  reg.push_back(lake_at_rest_1d("wb1d_smooth", "lake at rest over two Gaussian bumps", wb1d_smooth_b));
  reg.push_back(lake_at_rest_1d("wb1d_disc", "lake at rest over a step 0.5 on [-4, 4]", wb1d_disc_b));

  {
    ProblemSpec p;
    p.name = "steady_wavy";
    p.description = "flow over the Gaussian-bump bottom from a magnetic jump at x = 0";
    p.dims = 1;
    p.x0 = -10.0;
    p.x1 = 10.0;
    p.g = 9.812;
    p.bc = Boundary::outflow;
    p.t_end = 10.0;
    p.default_nx = 100;
    p.topo = [](double x, double) { return wb1d_smooth_b(x); };
    p.init = [](double x, double) {
      return x < 0.0 ? PrimitiveState{1.0, 1.0, 0.0, 0.05, 0.0}
                     : PrimitiveState{1.0, 1.0, 0.0, 0.1, 0.1};
    };
    reg.push_back(std::move(p));
  }

  reg.push_back(perturb_1d("perturb1d_large", 0.2, false));
  reg.push_back(perturb_1d("perturb1d_small", 0.001, false));
  reg.push_back(perturb_1d("perturb1d_mhd_large", 0.2, true));
  reg.push_back(perturb_1d("perturb1d_mhd_small", 0.001, true));

  {
    ProblemSpec p;
    p.name = "rp1";
    p.description = "Riemann problem (1,0,0,1,0) | (2,0,0,0.5,1)";
    p.dims = 1;
    p.x0 = -1.0;
    p.x1 = 1.0;
    p.g = 1.0;
    p.bc = Boundary::outflow;
    p.t_end = 0.4;
    p.default_nx = 100;
    p.topo = zero_topo;
    p.init = [](double x, double) {
      return x < 0.0 ? PrimitiveState{1.0, 0.0, 0.0, 1.0, 0.0}
                     : PrimitiveState{2.0, 0.0, 0.0, 0.5, 1.0};
    };
    reg.push_back(std::move(p));
  }

  {
    VortexParams vp;
    reg.push_back(vortex_problem("vortex", "magnetic vortex translating with velocity (1, 1)", vp));
    vp.h_max = vortex_hmax_for_core(1e-6, vp);
    reg.push_back(vortex_problem("vortex_neardry",
                                 "translating vortex with minimum height 1e-6", vp));
  }

  reg.push_back(lake_at_rest_2d("wb2d_smooth", "2D lake at rest over a Gaussian hump", wb2d_smooth_b));
  reg.push_back(lake_at_rest_2d("wb2d_disc", "2D lake at rest over a rectangular step", wb2d_disc_b));

  {
    ProblemSpec p;
    p.name = "perturb2d";
    p.description = "2D perturbation h = 1.01 - b on 0.05 < x < 0.15 over a Gaussian hump";
    p.dims = 2;
    p.x0 = 0.0;
    p.x1 = 2.0;
    p.y0 = 0.0;
    p.y1 = 1.0;
    p.g = 9.812;
    p.bc = Boundary::outflow;
    p.t_end = 0.6;
    p.default_nx = 200;
    p.default_ny = 100;
    p.topo = wb2d_smooth_b;
    p.init = [](double x, double y) {
      const double b = wb2d_smooth_b(x, y);
      return PrimitiveState{((x > 0.05 && x < 0.15) ? 1.01 : 1.0) - b, 0.0, 0.0, 0.0, 0.0};
    };
    reg.push_back(std::move(p));
  }

  {
    ProblemSpec p;
    p.name = "orszag_tang";
    p.description = "Orszag-Tang like problem (25/9, -sin y, sin x, -sin y, sin 2x)";
    p.dims = 2;
    p.x0 = 0.0;
    p.x1 = 2.0 * kPi;
    p.y0 = 0.0;
    p.y1 = 2.0 * kPi;
    p.g = 1.0;
    p.bc = Boundary::periodic;
    p.node_offset = 0.0;
    p.t_end = 2.0;
    p.default_nx = 100;
    p.default_ny = 100;
    p.topo = zero_topo;
    p.init = [](double x, double y) {
      return PrimitiveState{25.0 / 9.0, -std::sin(y), std::sin(x), -std::sin(y), std::sin(2.0 * x)};
    };
    reg.push_back(std::move(p));
  }

  {
    ProblemSpec p;
    p.name = "rotor";
    p.description = "rotor: disk r < 0.1 with h = 10 spinning, h Bx = 1";
    p.dims = 2;
    p.x0 = -1.0;
    p.x1 = 1.0;
    p.y0 = -1.0;
    p.y1 = 1.0;
    p.g = 1.0;
    p.bc = Boundary::outflow;
    p.t_end = 0.2;
    p.default_nx = 100;
    p.default_ny = 100;
    p.topo = zero_topo;
    p.init = [](double x, double y) {
      const double r = std::sqrt(x * x + y * y);
      const PrimitiveState in{10.0, -y, x, 0.0, 0.0};
      const PrimitiveState out{1.0, 0.0, 0.0, 0.0, 0.0};
      PrimitiveState w = r < 0.1 ? in : out;
      w.bx = 1.0 / w.h;
      return w;
    };
    reg.push_back(std::move(p));
  }

  return reg;
}

}  // namespace

const std::vector<ProblemSpec>& registry() {
  static const std::vector<ProblemSpec> reg = build_registry();
  return reg;
}

const ProblemSpec& find_problem(const std::string& name) {
  for (const auto& p : registry())
    if (p.name == name) return p;
  throw ConfigError("unknown problem '" + name + "' (see list-problems)");
}

Grid make_grid(const ProblemSpec& problem, int nx, int ny) {
  Grid grid = problem.dims == 1
                  ? Grid(nx, problem.x0, problem.x1, problem.node_offset)
                  : Grid(nx, ny > 0 ? ny : nx, problem.x0, problem.x1, problem.y0, problem.y1,
                         problem.node_offset);
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      const double y = grid.dims() == 2 ? grid.y(j) : 0.0;
      const PrimitiveState w = problem.init(x, y);
      if (!(w.h > 0.0)) throw NonPositiveHeight("initial data of " + problem.name, w.h);
      grid.set_cons(i, j, prim_to_cons(w));
      grid.set_topo(i, j, problem.topo(x, y));
    }
  apply_bc(grid, problem.bc);
  return grid;
}

SchemeConfig problem_config(const ProblemSpec& problem, SchemeConfig base) {
  base.g = problem.g;
  base.bc = problem.bc;
  return base;
}

std::vector<PrimitiveState> reference_solution(const ProblemSpec& problem, int fine_nx,
                                               int sample_nx, Variant scheme, double t_end) {
  if (problem.dims != 1) throw ConfigError("reference_solution supports 1D problems only");
  SchemeConfig cfg;
  cfg.variant = scheme;
  cfg = problem_config(problem, cfg);
  const double t = t_end >= 0.0 ? t_end : problem.t_end;
  const RunResult res = run(make_grid(problem, fine_nx), cfg, t);
  const Grid& fine = res.grid;

  const Grid coarse(sample_nx, problem.x0, problem.x1, problem.node_offset);
  std::vector<PrimitiveState> out(static_cast<std::size_t>(sample_nx));
  for (int i = 0; i < sample_nx; ++i) {
    // position in fine node-index space
    const double s = (coarse.x(i) - problem.x0) / fine.dx() - fine.node_offset();
    const int lo = std::clamp(static_cast<int>(std::floor(s)), 0, fine_nx - 1);
    const int hi = std::min(lo + 1, fine_nx - 1);
    const double a = std::clamp(s - lo, 0.0, 1.0);
    const Vec5 wl = cons_to_prim(fine.cons(lo)).to_array();
    const Vec5 wr = cons_to_prim(fine.cons(hi)).to_array();
    out[i] = PrimitiveState::from_array((1.0 - a) * wl + a * wr);
  }
  return out;
}

ErrorNorms solution_error(const Grid& grid, const ProblemSpec& problem, double t, Field f) {
  if (!problem.exact) throw ConfigError("problem '" + problem.name + "' has no exact solution");
  ErrorNorms e;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const double y = grid.dims() == 2 ? grid.y(j) : 0.0;
      const double num = field_value(cons_to_prim(grid.cons(i, j)), f);
      const double ex = field_value(problem.exact(grid.x(i), y, t), f);
      const double d = std::abs(num - ex);
      e.l1 += d;
      e.linf = std::max(e.linf, d);
    }
  e.l1 /= static_cast<double>(grid.nx()) * grid.ny();
  return e;
}

}  // namespace swmhd
