#include "swmhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swmhd/errors.hpp"
#include "swmhd/flux_ec.hpp"
#include "swmhd/flux_es.hpp"

namespace swmhd {

void validate(const SchemeConfig& cfg) {
  if (!(cfg.g > 0.0)) throw ConfigError("gravity g must be positive");
  if (!(cfg.mu > 0.0 && cfg.mu <= 1.0)) throw ConfigError("CFL number mu must lie in (0, 1]");
  if (!(cfg.eps > 0.0)) throw ConfigError("dry threshold eps must be positive");
  combination_coeffs(cfg.p);
  if (cfg.variant == Variant::es || cfg.variant == Variant::es_pp) es_half_order(cfg.k);
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::ec: return "ec";
    case Variant::es: return "es";
    case Variant::es_pp: return "es-pp";
    case Variant::lf: return "lf";
  }
  return "?";
}

std::string to_string(DtRule r) { return r == DtRule::standard ? "standard" : "accuracy"; }

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "outflow"; }

Variant parse_variant(const std::string& s) {
  if (s == "ec") return Variant::ec;
  if (s == "es") return Variant::es;
  if (s == "es-pp" || s == "es_pp") return Variant::es_pp;
  if (s == "lf") return Variant::lf;
  throw ConfigError("unknown scheme '" + s + "' (expected ec, es, es-pp or lf)");
}

DtRule parse_dt_rule(const std::string& s) {
  if (s == "standard") return DtRule::standard;
  if (s == "accuracy" || s == "accuracy_test") return DtRule::accuracy_test;
  throw ConfigError("unknown dt rule '" + s + "' (expected standard or accuracy)");
}

Boundary parse_boundary(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "outflow") return Boundary::outflow;
  throw ConfigError("unknown boundary '" + s + "' (expected periodic or outflow)");
}

namespace {

constexpr int G = Grid::kGhost;

// Scratch space for one grid line (row or column) including ghosts, always
// expressed in the frame of the sweep direction.
struct LineWork {
  std::vector<ConservedState> u;
  std::vector<PrimitiveState> w;
  std::vector<double> b;
  std::vector<double> hb;  // h B_dir
  std::vector<EntropyVars> v;
  std::array<std::vector<Vec5>, kMaxHalfOrder + 1> pair;  // pair[r][j] = F(U_j, U_{j+r})
  std::vector<Vec5> flux;                                  // interface m = between m-1 and m
  std::vector<double> hb_mean;
  std::vector<double> b_mean;
  std::vector<Vec5> out;

  void resize(int n) {
    const std::size_t len = static_cast<std::size_t>(n + 2 * G);
    u.resize(len);
    w.resize(len);
    b.resize(len);
    hb.resize(len);
    v.resize(len);
    for (auto& pr : pair) pr.resize(len);
    flux.resize(static_cast<std::size_t>(n + 1));
    hb_mean.resize(static_cast<std::size_t>(n + 1));
    b_mean.resize(static_cast<std::size_t>(n + 1));
    out.assign(static_cast<std::size_t>(n), Vec5{});
  }
};

// Semi-discrete tendencies of one line. u and b must be filled (with ghosts);
// lam_eff is the dt/dx factor used by the positivity limiter.
void sweep_line(LineWork& lw, int n, const SchemeConfig& cfg, double dx, double lam_eff) {
  const double g = cfg.g;
  const int len = n + 2 * G;
  const bool need_v = cfg.variant == Variant::es || cfg.variant == Variant::es_pp;
  for (int j = 0; j < len; ++j) {
    lw.w[j] = cons_to_prim(lw.u[j]);
    lw.hb[j] = lw.u[j].px;
    if (need_v) lw.v[j] = entropy_vars(lw.w[j], lw.b[j], g);
  }

  if (cfg.variant == Variant::lf) {
    for (int m = 0; m <= n; ++m) {
      const int l = m - 1 + G, r = m + G;
      lw.flux[m] = lf_flux(lw.w[l], lw.w[r], lw.b[l], lw.b[r], g, Axis::x);
      lw.hb_mean[m] = 0.5 * (lw.hb[l] + lw.hb[r]);
      lw.b_mean[m] = 0.5 * (lw.b[l] + lw.b[r]);
    }
  } else {
    const int p = cfg.p;
    const CombinationCoeffs c = combination_coeffs(p);
    for (int r = 1; r <= p; ++r)
      for (int j = G - p; j + r < len; ++j)
        lw.pair[r][j] = ec_flux_x(lw.w[j], lw.w[j + r], lw.b[j], lw.b[j + r], g);

    for (int m = 0; m <= n; ++m) {
      const int l = m - 1 + G;
      Vec5 f{};
      double hbm = 0.0, bm = 0.0;
      for (int r = 1; r <= p; ++r) {
        Vec5 fs{};
        double hbs = 0.0, bs = 0.0;
        for (int s = 0; s < r; ++s) {
          fs += lw.pair[r][l - s];
          hbs += lw.hb[l - s] + lw.hb[l - s + r];
          bs += lw.b[l - s] + lw.b[l - s + r];
        }
        const double a = c.alpha[r - 1];
        f += a * fs;
        hbm += a * hbs;
        bm += a * bs;
      }
      lw.flux[m] = f;
      lw.hb_mean[m] = 0.5 * hbm;
      lw.b_mean[m] = 0.5 * bm;
    }

    if (need_v) {
      for (int m = 0; m <= n; ++m) {
        const int l = m - 1 + G, r = m + G;
        const PrimitiveState& wl = lw.w[l];
        const PrimitiveState& wr = lw.w[r];
        const PrimitiveState mean =
            PrimitiveState::from_array(0.5 * (wl.to_array() + wr.to_array()));
        const Mat5 rm = cholesky_R(mean, g);
        const double alpha = local_alpha(wl, wr, g, Axis::x);
        const ReconstructedJump jmp =
            scaled_entropy_jump(std::span<const EntropyVars>(lw.v).subspan(l - 2, 6), rm);
        const Vec5 s = sign_switch(jmp.jump, jmp.raw_jump);
        Vec5 sj;
        for (int q = 0; q < 5; ++q) sj[q] = s[q] * jmp.jump[q];
        lw.flux[m] += (-0.5 * alpha) * mat_vec(rm, sj);
      }
    }

    if (cfg.variant == Variant::es_pp) {
      for (int m = 0; m <= n; ++m) {
        const int l = m - 1 + G, r = m + G;
        const Vec5 f_lf = lf_flux(lw.w[l], lw.w[r], lw.b[l], lw.b[r], g, Axis::x);
        const double hl = lw.w[l].h, hr = lw.w[r].h;
        const InterfaceHeights lf{hl - 2.0 * lam_eff * f_lf[0], hr + 2.0 * lam_eff * f_lf[0]};
        const InterfaceHeights kth{hl - 2.0 * lam_eff * lw.flux[m][0],
                                   hr + 2.0 * lam_eff * lw.flux[m][0]};
        const double theta = pp_theta(lf, kth, cfg.eps);
        if (theta < 1.0) {
          lw.flux[m] = limit_flux(lw.flux[m], f_lf, theta);
          lw.hb_mean[m] = limit_source_mean(lw.hb_mean[m], 0.5 * (lw.hb[l] + lw.hb[r]), theta);
          lw.b_mean[m] = limit_source_mean(lw.b_mean[m], 0.5 * (lw.b[l] + lw.b[r]), theta);
        }
      }
    }
  }

  const double inv = 1.0 / dx;
  for (int i = 0; i < n; ++i) {
    const PrimitiveState& w = lw.w[i + G];
    Vec5 d = (-inv) * (lw.flux[i + 1] - lw.flux[i]);
    const double dhb = (lw.hb_mean[i + 1] - lw.hb_mean[i]) * inv;
    const double db = (lw.b_mean[i + 1] - lw.b_mean[i]) * inv;
    d[1] -= g * w.h * db;
    d[3] -= w.vx * dhb;
    d[4] -= w.vy * dhb;
    lw.out[i] = d;
  }
}

void zero_tendency(const Grid& grid, Tendency& t) {
  for (auto& c : t) c.assign(grid.size(), 0.0);
}

// Per-thread scratch, reused across calls to avoid reallocating per stage.
LineWork& line_work() {
  thread_local LineWork lw;
  return lw;
}

// Effective dt/dx factors of the positivity split. In 2D the update is split
// as a convex combination of the two directions with weights proportional to
// lam_d * alpha_d, so each directional half-update sees an LF CFL number of
// sum_d lam_d alpha_d.
std::array<double, 2> pp_lambdas(const Grid& grid, const SchemeConfig& cfg, double dt) {
  if (cfg.variant != Variant::es_pp) return {0.0, 0.0};
  const double lx = dt / grid.dx();
  if (grid.dims() == 1) return {lx, 0.0};
  const double ly = dt / grid.dy();
  const double ax = max_wave_speed(grid, cfg.g, Axis::x);
  const double ay = max_wave_speed(grid, cfg.g, Axis::y);
  const double total = lx * ax + ly * ay;
  return {total / ax, total / ay};
}

void sweep_x(const Grid& grid, const SchemeConfig& cfg, double lam, LineWork& lw, Tendency& t) {
  const int nx = grid.nx();
  lw.resize(nx);
  const auto& f = grid.fields();
  const auto& topo = grid.topography();
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = -G; i < nx + G; ++i) {
      const std::size_t n = grid.index(i, j);
      lw.u[i + G] = {f[0][n], f[1][n], f[2][n], f[3][n], f[4][n]};
      lw.b[i + G] = topo[n];
    }
    sweep_line(lw, nx, cfg, grid.dx(), lam);
    for (int i = 0; i < nx; ++i) {
      const std::size_t n = grid.index(i, j);
      for (int c = 0; c < 5; ++c) t[c][n] += lw.out[i][c];
    }
  }
}

void sweep_y(const Grid& grid, const SchemeConfig& cfg, double lam, LineWork& lw, Tendency& t) {
  const int ny = grid.ny();
  lw.resize(ny);
  const auto& f = grid.fields();
  const auto& topo = grid.topography();
  for (int i = 0; i < grid.nx(); ++i) {
    for (int j = -G; j < ny + G; ++j) {
      const std::size_t n = grid.index(i, j);
      lw.u[j + G] = swap_axes(ConservedState{f[0][n], f[1][n], f[2][n], f[3][n], f[4][n]});
      lw.b[j + G] = topo[n];
    }
    sweep_line(lw, ny, cfg, grid.dy(), lam);
    for (int j = 0; j < ny; ++j) {
      const std::size_t n = grid.index(i, j);
      const Vec5 d = swap_axes(lw.out[j]);
      for (int c = 0; c < 5; ++c) t[c][n] += d[c];
    }
  }
}

}  // namespace

void rhs_into(const Grid& grid, const SchemeConfig& cfg, double dt, Tendency& out) {
  zero_tendency(grid, out);
  LineWork& lw = line_work();
  const auto lam = pp_lambdas(grid, cfg, dt);
  sweep_x(grid, cfg, lam[0], lw, out);
  if (grid.dims() == 2) sweep_y(grid, cfg, lam[1], lw, out);
}

Tendency rhs_1d(const Grid& grid, const SchemeConfig& cfg, double dt) {
  if (grid.dims() != 1) throw SolverError("rhs_1d called on a 2D grid");
  Tendency t;
  rhs_into(grid, cfg, dt, t);
  return t;
}

Tendency rhs_2d(const Grid& grid, const SchemeConfig& cfg, double dt) {
  if (grid.dims() != 2) throw SolverError("rhs_2d called on a 1D grid");
  Tendency t;
  rhs_into(grid, cfg, dt, t);
  return t;
}

Tendency rhs(const Grid& grid, const SchemeConfig& cfg, double dt) {
  Tendency t;
  rhs_into(grid, cfg, dt, t);
  return t;
}

double max_wave_speed(const Grid& grid, double g, Axis dir) {
  double a = 0.0;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const PrimitiveState w = cons_to_prim(grid.cons(i, j));
      const double v = dir == Axis::x ? w.vx : w.vy;
      const double b = dir == Axis::x ? w.bx : w.by;
      a = std::max(a, std::abs(v) + std::sqrt(g * w.h + b * b));
    }
  return a;
}

double compute_dt(const Grid& grid, const SchemeConfig& cfg) {
  double dt;
  if (grid.dims() == 1) {
    dt = cfg.mu * grid.dx() / max_wave_speed(grid, cfg.g, Axis::x);
  } else {
    dt = cfg.mu / (max_wave_speed(grid, cfg.g, Axis::x) / grid.dx() +
                   max_wave_speed(grid, cfg.g, Axis::y) / grid.dy());
  }
  if (cfg.dt_rule == DtRule::accuracy_test && cfg.variant != Variant::lf) {
    const int order = cfg.variant == Variant::ec ? 2 * cfg.p : cfg.k;
    const double h = grid.dims() == 1 ? grid.dx() : std::min(grid.dx(), grid.dy());
    dt = std::min(dt, cfg.mu * std::pow(h, order / 3.0));
  }
  return dt;
}

namespace {

void euler_stage(Grid& grid, const SchemeConfig& cfg, double dt,
                 const std::array<std::vector<double>, 5>* u0, SspRk3Stage st) {
  apply_bc(grid, cfg.bc);
  thread_local Tendency t;
  rhs_into(grid, cfg, dt, t);
  auto& f = grid.fields();
  for (int c = 0; c < 5; ++c) {
    auto& fc = f[c];
    const auto& tc = t[c];
    const std::size_t n = fc.size();
    if (u0 == nullptr || st.keep == 0.0) {
      for (std::size_t q = 0; q < n; ++q) fc[q] = st.update * (fc[q] + dt * tc[q]);
    } else {
      const auto& u0c = (*u0)[c];
      for (std::size_t q = 0; q < n; ++q)
        fc[q] = st.keep * u0c[q] + st.update * (fc[q] + dt * tc[q]);
    }
  }
}

}  // namespace

void ssp_rk3_step(Grid& grid, const SchemeConfig& cfg, double dt) {
  thread_local std::array<std::vector<double>, 5> u0;
  u0 = grid.fields();
  for (const auto& st : kSspRk3) euler_stage(grid, cfg, dt, &u0, st);
  apply_bc(grid, cfg.bc);
}

void forward_euler_step(Grid& grid, const SchemeConfig& cfg, double dt) {
  euler_stage(grid, cfg, dt, nullptr, kSspRk3[0]);
  apply_bc(grid, cfg.bc);
}

void advance(Grid& grid, const SchemeConfig& cfg, double dt) {
  if (cfg.variant == Variant::lf)
    forward_euler_step(grid, cfg, dt);
  else
    ssp_rk3_step(grid, cfg, dt);
}

double total_entropy(const Grid& grid, double g) {
  const double cell = grid.dims() == 1 ? grid.dx() : grid.dx() * grid.dy();
  double sum = 0.0;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) sum += entropy(grid.cons(i, j), grid.topo(i, j), g);
  return sum * cell;
}

namespace {

std::string context(long step, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "step " << step << " at t = " << t << ": ";
  return os.str();
}

}  // namespace

RunResult run(Grid grid, const SchemeConfig& cfg, double t_end, const StepObserver& observer) {
  validate(cfg);
  RunResult res;
  apply_bc(grid, cfg.bc);
  double t = 0.0;
  long step = 0;

  StepRecord rec{0, 0.0, 0.0, grid.min_height(), false};
  res.entropy.times.push_back(0.0);
  res.entropy.total_entropy.push_back(total_entropy(grid, cfg.g));
  if (observer) observer(grid, rec);

  while (t < t_end) {
    ++step;
    double dt;
    try {
      dt = compute_dt(grid, cfg);
    } catch (const NonPositiveHeight& e) {
      throw NonPositiveHeight(context(step, t) + e.what(), e.height());
    }
    if (!std::isfinite(dt) || !(dt > 0.0))
      throw SolverError(context(step, t) + "invalid time step " + std::to_string(dt));
    bool last = false;
    if (t + dt * (1.0 + 1e-12) >= t_end) {
      dt = t_end - t;
      last = true;
    }

    bool halved = false;
    const Grid saved = cfg.variant == Variant::es_pp ? grid : Grid{};
    for (;;) {
      try {
        advance(grid, cfg, dt);
        break;
      } catch (const InvalidLF& e) {
        if (halved) throw InvalidLF(context(step, t) + e.what() + " (after halving dt)");
        grid = saved;
        dt *= 0.5;
        halved = true;
        last = false;
      } catch (const NonPositiveHeight& e) {
        throw NonPositiveHeight(context(step, t) + e.what(), e.height());
      }
    }
    t = last ? t_end : t + dt;

    rec = StepRecord{step, t, dt, grid.min_height(), halved};
    res.steps.push_back(rec);
    res.entropy.times.push_back(t);
    res.entropy.total_entropy.push_back(total_entropy(grid, cfg.g));
    if (observer) observer(grid, rec);
  }
  res.t = t;
  res.grid = std::move(grid);
  return res;
}

}  // namespace swmhd
