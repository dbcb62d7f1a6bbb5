#pragma once
// Benchmark problem registry: initial data, topography, exact solutions where
// known, and per-problem defaults.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swmhd/grid.hpp"
#include "swmhd/solver.hpp"
#include "swmhd/state.hpp"

namespace swmhd {

enum class Field { h, vx, vy, bx, by };

std::string to_string(Field f);
double field_value(const PrimitiveState& w, Field f);

struct ProblemSpec {
  std::string name;
  std::string description;
  int dims = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double g = 1.0;
  Boundary bc = Boundary::periodic;
  double t_end = 1.0;
  double node_offset = 0.5;  // 0 puts a node on x0 (and y0)
  int default_nx = 100;
  int default_ny = 1;
  std::function<PrimitiveState(double x, double y)> init;
  std::function<double(double x, double y)> topo;
  /// Exact solution, when one is known (steady problems return the initial
  /// data).
  std::function<PrimitiveState(double x, double y, double t)> exact;
  /// Field used for convergence tables.
  Field error_field = Field::h;
};

const std::vector<ProblemSpec>& registry();

/// Throws ConfigError for an unknown name.
const ProblemSpec& find_problem(const std::string& name);

struct VortexParams {
  double h_max = 1.0;
  double v_max = 0.2;
  double b_max = 0.1;
  double g = 1.0;
  double x0 = -8.0, x1 = 8.0, y0 = -8.0, y1 = 8.0;  // periodic box
};

/// h_max that makes the vortex core height exactly `core`.
double vortex_hmax_for_core(double core, const VortexParams& vp);

/// Co-moving steady vortex profile at (x, y), velocity frame at rest.
PrimitiveState vortex_steady(double x, double y, const VortexParams& vp);

/// Exact translating vortex: the steady profile advected with velocity (1, 1)
/// on the periodic box.
PrimitiveState vortex_exact(double x, double y, double t, const VortexParams& vp);

/// Grid of the requested resolution (ny ignored in 1D) filled with the initial
/// data and topography, ghosts set.
Grid make_grid(const ProblemSpec& problem, int nx, int ny = 0);

/// Scheme configuration defaults of a problem (g, boundary) on top of base.
SchemeConfig problem_config(const ProblemSpec& problem, SchemeConfig base);

/// Runs the problem at a fine resolution with `scheme` (default: first-order
/// LF) to its t_end and samples the result at the nodes of a sample_nx grid by
/// linear interpolation. 1D only.
std::vector<PrimitiveState> reference_solution(const ProblemSpec& problem, int fine_nx,
                                               int sample_nx, Variant scheme = Variant::lf,
                                               double t_end = -1.0);

struct ErrorNorms {
  double l1 = 0.0;    // mean absolute nodal error
  double linf = 0.0;  // max absolute nodal error
};

/// Error of one field against the problem's exact solution at time t.
ErrorNorms solution_error(const Grid& grid, const ProblemSpec& problem, double t, Field f);

}  // namespace swmhd
