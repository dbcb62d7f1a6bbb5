#pragma once
// Semi-discrete right-hand side assembly, time-step selection, SSP-RK3
// integration and entropy monitoring.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "swmhd/grid.hpp"
#include "swmhd/positivity.hpp"

namespace swmhd {

enum class Variant {
  ec,     // 2p-th order entropy conservative
  es,     // k-th order entropy stable (WENO5 dissipation with sign switch)
  es_pp,  // es plus the positivity-preserving flux limiter
  lf,     // first-order local Lax-Friedrichs scheme, forward Euler in time
};

enum class DtRule { standard, accuracy_test };

struct SchemeConfig {
  double g = 1.0;
  double mu = 0.5;
  int p = 3;
  int k = 5;
  Variant variant = Variant::es;
  Boundary bc = Boundary::periodic;
  double eps = kDefaultDryEps;
  DtRule dt_rule = DtRule::standard;
};

/// Throws ConfigError / UnsupportedOrder for an inconsistent configuration.
void validate(const SchemeConfig& cfg);

std::string to_string(Variant v);
std::string to_string(DtRule r);
std::string to_string(Boundary b);
Variant parse_variant(const std::string& s);
DtRule parse_dt_rule(const std::string& s);
Boundary parse_boundary(const std::string& s);

/// Per-interior-node tendencies dU/dt, one array per conserved component,
/// laid out like the grid arrays (ghost entries are zero).
using Tendency = std::array<std::vector<double>, 5>;

/// 1D tendencies. Ghosts must be filled. dt is only used by es_pp (the
/// limiter needs dt/dx); pass 0 otherwise.
Tendency rhs_1d(const Grid& grid, const SchemeConfig& cfg, double dt = 0.0);

/// 2D tendencies: sum of the x sweep and the y sweep.
Tendency rhs_2d(const Grid& grid, const SchemeConfig& cfg, double dt = 0.0);

/// Dispatches on grid.dims().
Tendency rhs(const Grid& grid, const SchemeConfig& cfg, double dt = 0.0);

/// As rhs(), writing into out (resized as needed).
void rhs_into(const Grid& grid, const SchemeConfig& cfg, double dt, Tendency& out);

/// Maximum of |v_dir| + sqrt(g h + B_dir^2) over interior nodes.
double max_wave_speed(const Grid& grid, double g, Axis dir);

/// Time step for the configured rule. The accuracy rule mu dx^(order/3) is
/// capped by the standard CFL step.
double compute_dt(const Grid& grid, const SchemeConfig& cfg);

// SSP-RK3 as convex combinations of forward-Euler stages:
//   u1 = u + dt L(u)
//   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
//   u  = 1/3 u + 2/3 (u2 + dt L(u2))
struct SspRk3Stage {
  double keep;    // weight of u^n
  double update;  // weight of (u_stage + dt L(u_stage))
};
inline constexpr std::array<SspRk3Stage, 3> kSspRk3{{{0.0, 1.0}, {0.75, 0.25}, {1.0 / 3.0, 2.0 / 3.0}}};

/// Generic SSP-RK3 step for any type with u + s*v arithmetic.
template <class State, class Op>
State ssp_rk3(const State& u0, double dt, Op&& op) {
  State u = u0;
  for (const auto& st : kSspRk3) {
    const State euler = u + dt * op(u);
    u = st.keep * u0 + st.update * euler;
  }
  return u;
}

/// Advances the grid by dt. Ghosts are refilled before every stage.
void ssp_rk3_step(Grid& grid, const SchemeConfig& cfg, double dt);

/// One forward-Euler step (used by the lf variant).
void forward_euler_step(Grid& grid, const SchemeConfig& cfg, double dt);

/// Advances with the integrator that matches cfg.variant.
void advance(Grid& grid, const SchemeConfig& cfg, double dt);

/// sum over interior nodes of η(U, b) dx (dy).
double total_entropy(const Grid& grid, double g);

struct EntropyTrace {
  std::vector<double> times;
  std::vector<double> total_entropy;
};

struct StepRecord {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double min_h = 0.0;
  bool dt_halved = false;
};

struct RunResult {
  Grid grid;
  EntropyTrace entropy;
  std::vector<StepRecord> steps;
  double t = 0.0;
};

/// Called after every accepted step (and once for the initial state with
/// step = 0).
using StepObserver = std::function<void(const Grid&, const StepRecord&)>;

/// Integrates from t = 0 to t_end; the last step is clipped to land on t_end.
/// Lower-level errors are rethrown as the same type with step index and time
/// prepended. InvalidLF halves the step once before failing.
RunResult run(Grid grid, const SchemeConfig& cfg, double t_end, const StepObserver& observer = {});

}  // namespace swmhd
