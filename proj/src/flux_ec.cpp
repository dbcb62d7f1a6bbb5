#include "swmhd/flux_ec.hpp"

#include <string>

#include "swmhd/errors.hpp"

namespace swmhd {

CombinationCoeffs combination_coeffs(int p) {
  switch (p) {
    case 1:
      return {1, {1.0}};
    case 2:
      return {2, {4.0 / 3.0, -1.0 / 6.0}};
    case 3:
      return {3, {3.0 / 2.0, -3.0 / 10.0, 1.0 / 30.0}};
    default:
      throw UnsupportedOrder("EC half-order p = " + std::to_string(p) + " not in {1, 2, 3}");
  }
}

Vec5 ec_flux_x(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br,
               double g) {
  if (!(wl.h > 0.0)) throw NonPositiveHeight(wl.h);
  if (!(wr.h > 0.0)) throw NonPositiveHeight(wr.h);
  const double h = 0.5 * (wl.h + wr.h);
  const double vx = 0.5 * (wl.vx + wr.vx);
  const double vy = 0.5 * (wl.vy + wr.vy);
  const double bx = 0.5 * (wl.bx + wr.bx);
  const double by = 0.5 * (wl.by + wr.by);
  const double h2 = 0.5 * (wl.h * wl.h + wr.h * wr.h);
  const double hbx = 0.5 * (wl.h * wl.bx + wr.h * wr.bx);
  const double hb = 0.5 * (wl.h * bl + wr.h * br);
  const double b = 0.5 * (bl + br);

  const double mass = h * vx;
  return {mass,
          mass * vx + 0.5 * g * h2 - hbx * bx + g * (hb - h * b),
          mass * vy - hbx * by,
          mass * bx - hbx * vx,
          mass * by - hbx * vy};
}

Vec5 ec_flux_y(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br,
               double g) {
  return swap_axes(ec_flux_x(swap_axes(wl), swap_axes(wr), bl, br, g));
}

Vec5 ec_flux(const PrimitiveState& wl, const PrimitiveState& wr, double bl, double br, double g,
             Axis dir) {
  return dir == Axis::x ? ec_flux_x(wl, wr, bl, br, g) : ec_flux_y(wl, wr, bl, br, g);
}

namespace {

std::size_t checked_centre(std::size_t n, int p) {
  if (n % 2 != 0 || n / 2 < static_cast<std::size_t>(p))
    throw SolverError("stencil of " + std::to_string(n) + " nodes too small for p = " +
                      std::to_string(p));
  return n / 2 - 1;
}

}  // namespace

Vec5 high_order_ec_flux(const EcFluxStencil& stencil, int p, double g) {
  const CombinationCoeffs c = combination_coeffs(p);
  const std::size_t i = checked_centre(stencil.states.size(), p);
  if (stencil.topo.size() != stencil.states.size())
    throw SolverError("stencil topography and state windows differ in length");
  Vec5 f{};
  for (int r = 1; r <= p; ++r) {
    Vec5 sum{};
    for (int s = 0; s < r; ++s) {
      const std::size_t a = i - s;
      const std::size_t b = i - s + r;
      sum += ec_flux_x(stencil.states[a], stencil.states[b], stencil.topo[a], stencil.topo[b], g);
    }
    f += c.alpha[r - 1] * sum;
  }
  return f;
}

double high_order_source_mean(std::span<const double> values, int p) {
  const CombinationCoeffs c = combination_coeffs(p);
  const std::size_t i = checked_centre(values.size(), p);
  double m = 0.0;
  for (int r = 1; r <= p; ++r) {
    double sum = 0.0;
    for (int s = 0; s < r; ++s) sum += values[i - s] + values[i - s + r];
    m += c.alpha[r - 1] * sum;
  }
  return 0.5 * m;
}

double numerical_entropy_flux(const PrimitiveState& wl, const PrimitiveState& wr, double bl,
                              double br, double g) {
  const Vec5 f = ec_flux_x(wl, wr, bl, br, g);
  const EntropyVars vl = entropy_vars(wl, bl, g);
  const EntropyVars vr = entropy_vars(wr, br, g);
  const Vec5 vmean = 0.5 * (vl.to_array() + vr.to_array());
  const double phimean = 0.5 * (phi(vl) + phi(vr));
  const double hbxmean = 0.5 * (wl.h * wl.bx + wr.h * wr.bx);
  const double psimean =
      0.5 * (entropy_potential(wl, g, Axis::x) + entropy_potential(wr, g, Axis::x));
  const double hvxmean = 0.5 * (wl.h * wl.vx + wr.h * wr.vx);
  const double bmean = 0.5 * (bl + br);
  const double hbvxmean = 0.5 * (wl.h * bl * wl.vx + wr.h * br * wr.vx);
  return dot(vmean, f) + phimean * hbxmean - psimean + g * hvxmean * bmean - g * hbvxmean;
}

double entropy_condition_residual(const Vec5& f, const PrimitiveState& wl,
                                  const PrimitiveState& wr, double bl, double br, double g) {
  const EntropyVars vl = entropy_vars(wl, bl, g);
  const EntropyVars vr = entropy_vars(wr, br, g);
  const Vec5 dv = vr.to_array() - vl.to_array();
  const double dpsi = entropy_potential(wr, g, Axis::x) - entropy_potential(wl, g, Axis::x);
  const double dphi = phi(vr) - phi(vl);
  const double hbxmean = 0.5 * (wl.h * wl.bx + wr.h * wr.bx);
  const double dhbvx = wr.h * br * wr.vx - wl.h * bl * wl.vx;
  const double dhvx = wr.h * wr.vx - wl.h * wl.vx;
  const double bmean = 0.5 * (bl + br);
  return dot(dv, f) - dpsi + dphi * hbxmean - g * dhbvx + g * dhvx * bmean;
}

}  // namespace swmhd
