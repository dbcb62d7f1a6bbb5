#pragma once
// Two-point entropy-conservative fluxes and their 2p-th order combinations,
// together with the source-term means that have to use the same combination
// weights for the scheme to stay well-balanced and entropy conservative.

#include <span>
#include <vector>

#include "swmhd/state.hpp"

namespace swmhd {

constexpr int kMaxHalfOrder = 3;

struct CombinationCoeffs {
  int p = 1;
  std::vector<double> alpha;  // alpha[r-1] multiplies the distance-r pairs
};

/// Coefficients for p = 1, 2, 3. Throws UnsupportedOrder otherwise.
CombinationCoeffs combination_coeffs(int p);

/// Two-point EC flux in x. Symmetric in its arguments and consistent with
/// physical_flux(w, g, Axis::x) for equal states. Topography enters through
/// g(<hb> - <h><b>) in the x-momentum component.
Vec5 ec_flux_x(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br, double g);

/// y flux: ec_flux_x conjugated by swap_axes.
Vec5 ec_flux_y(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br, double g);

Vec5 ec_flux(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br, double g,
             Axis dir);

/// A window of consecutive nodes around one interface. The interface lies
/// between states[n/2 - 1] and states[n/2], n = states.size() (even). The
/// window must contain at least p nodes on each side.
struct EcFluxStencil {
  std::span<const PrimitiveState> states;
  std::span<const double> topo;
};

/// sum_r alpha_r sum_{s<r} F(U_{i-s}, U_{i-s+r}) in x.
Vec5 high_order_ec_flux(const EcFluxStencil& stencil, int p, double g);

/// (1/2) sum_r alpha_r sum_{s<r} (a_{i-s} + a_{i-s+r}) over a window laid out
/// like EcFluxStencil.
double high_order_source_mean(std::span<const double> values, int p);

/// Numerical entropy flux paired with ec_flux_x.
double numerical_entropy_flux(const PrimitiveState& wl, const PrimitiveState& wr, double bl,
                              double br, double g);

/// Residual of the sufficient EC condition at one x-interface for a given
/// interface flux f:
///   [V].f - [psi] + [Phi]<hBx> - g[h b vx] + g[h vx]<b>.
/// Zero for ec_flux_x, non-positive for an entropy-stable flux.
double entropy_condition_residual(const Vec5& f, const PrimitiveState& wl,
                                  const PrimitiveState& wr, double bl, double br, double g);

}  // namespace swmhd
