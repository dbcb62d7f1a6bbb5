#pragma once
// Positivity-preserving flux limiter: per interface, blend the high-order
// flux with the Lax-Friedrichs flux so that both forward-Euler half-updates
// sharing that interface stay above the dry threshold eps.
//
// For node i the height update is split as h^{n+1} = (h^- + h^+)/2 with
//   h^+ = h_i - 2 lam F_h(i+1/2),   h^- = h_i + 2 lam F_h(i-1/2),
// so each half depends on a single interface flux.

#include <utility>

#include "swmhd/state.hpp"

namespace swmhd {

constexpr double kDefaultDryEps = 1e-13;

struct PPContext {
  double eps = kDefaultDryEps;
  double lam = 0.0;  // dt / dx, possibly rescaled by the 2D split weight
};

struct SplitHeights {
  double minus = 0.0;  // uses the flux at i-1/2
  double plus = 0.0;   // uses the flux at i+1/2
};

SplitHeights split_heights(double h_i, double flux_h_left, double flux_h_right, double lam);

/// The two half-heights that depend on one interface i+1/2: the "+" half of
/// node i and the "-" half of node i+1.
struct InterfaceHeights {
  double left_plus = 0.0;
  double right_minus = 0.0;
};

/// theta = min(theta+, theta-) in [0, 1]. Throws InvalidLF when an LF half
/// height is not above eps.
double pp_theta(const InterfaceHeights& lf, const InterfaceHeights& kth, double eps);

Vec5 limit_flux(const Vec5& f_kth, const Vec5& f_lf, double theta);

double limit_source_mean(double m_kth, double m_2pt, double theta);

}  // namespace swmhd
