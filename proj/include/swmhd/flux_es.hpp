#pragma once
// Entropy-stable dissipation for the EC fluxes and the local Lax-Friedrichs
// flux.
//
// The ES flux at an x-interface i+1/2 is
//
//   F_hat = F_ec^{2p} - (alpha/2) R S [[w]],
//
// where R is the closed-form Cholesky factor of dU/dV at the arithmetic-mean
// interface state, w = R^T V are the scaled entropy variables, [[w]] is the
// jump between the two WENO interface values of w, and S is the diagonal
// switch that keeps only components whose reconstructed jump has the sign of
// the raw two-point jump R^T (V_{i+1} - V_i). With that switch,
// [V]^T (F_hat - F_ec) = -(alpha/2) sum_l raw_l S_l jump_l <= 0.

#include <array>
#include <span>

#include "swmhd/flux_ec.hpp"
#include "swmhd/state.hpp"

namespace swmhd {

using Mat5 = std::array<std::array<double, 5>, 5>;

struct DissipationMatrix {
  Mat5 r{};
  double alpha = 0.0;
};

struct ReconstructedJump {
  Vec5 jump{};      // w+ - w- from the WENO interface values
  Vec5 raw_jump{};  // w_{i+1} - w_i
};

enum class Side { left, right };

/// Lower-triangular R with R R^T = dU/dV at wmean.
Mat5 cholesky_R(const PrimitiveState& wmean, double g);

/// max over both states of |v_dir| + sqrt(g h + B_dir^2).
double local_alpha(const PrimitiveState& wl, const PrimitiveState& wr, double g, Axis dir);

/// Fifth-order WENO-Z interpolation of point values to the interface i+1/2.
///   Side::left : values = a_{i-2..i+2}, returns the left-biased value w-.
///   Side::right: values = a_{i-1..i+3}, returns the right-biased value w+.
double weno5_interp(std::span<const double, 5> values, Side side);

/// w_j = R^T V_j for the six nodes i-2..i+3, WENO values from both sides,
/// and the raw two-point jump. v_stencil must hold exactly six entries.
ReconstructedJump scaled_entropy_jump(std::span<const EntropyVars> v_stencil, const Mat5& r);

/// S_l = 1 iff sign(jump_l) == sign(raw_l) != 0.
Vec5 sign_switch(const Vec5& jump, const Vec5& raw_jump);

Vec5 mat_vec(const Mat5& m, const Vec5& x);

/// Stencil of six nodes i-2..i+3 around the interface i+1/2, in the frame of
/// the sweep direction passed to es_flux.
struct EsFluxStencil {
  std::span<const PrimitiveState> states;
  std::span<const double> topo;
};

/// Entropy-stable interface flux. k must be 5 (WENO5); p in {1, 2, 3}.
Vec5 es_flux(const EsFluxStencil& stencil, int p, int k, double g, Axis dir);

/// Same as es_flux but also returns the dissipation term that was added,
/// (F_hat - F_ec), for diagnostics.
struct EsFluxParts {
  Vec5 ec{};
  Vec5 dissipation{};
};
EsFluxParts es_flux_parts(const EsFluxStencil& stencil, int p, int k, double g, Axis dir);

/// Local Lax-Friedrichs flux <F> - alpha [U] / 2.
Vec5 lf_flux(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br, double g,
             Axis dir);

/// Checks that k is a supported ES order; returns the matching half-order p.
int es_half_order(int k);

}  // namespace swmhd
