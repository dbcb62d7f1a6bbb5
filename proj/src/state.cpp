#include "swmhd/state.hpp"

#include "swmhd/errors.hpp"

namespace swmhd {

PrimitiveState cons_to_prim(const ConservedState& u) {
  if (!(u.h > 0.0)) throw NonPositiveHeight(u.h);
  const double inv = 1.0 / u.h;
  return {u.h, u.mx * inv, u.my * inv, u.px * inv, u.py * inv};
}

PrimitiveState cons_to_prim(const Vec5& u) { return cons_to_prim(ConservedState::from_array(u)); }

ConservedState prim_to_cons(const PrimitiveState& w) {
  return {w.h, w.h * w.vx, w.h * w.vy, w.h * w.bx, w.h * w.by};
}

EntropyVars entropy_vars(const PrimitiveState& w, double b, double g) {
  const double kin = 0.5 * (w.vx * w.vx + w.vy * w.vy + w.bx * w.bx + w.by * w.by);
  return {g * (w.h + b) - kin, w.vx, w.vy, w.bx, w.by};
}

double entropy(const ConservedState& u, double b, double g) {
  const PrimitiveState w = cons_to_prim(u);
  const double sq = w.vx * w.vx + w.vy * w.vy + w.bx * w.bx + w.by * w.by;
  return 0.5 * w.h * sq + 0.5 * g * w.h * w.h + g * w.h * b;
}

double entropy_flux(const PrimitiveState& w, double b, double g, Axis dir) {
  const double sq = w.vx * w.vx + w.vy * w.vy + w.bx * w.bx + w.by * w.by;
  const double vdir = dir == Axis::x ? w.vx : w.vy;
  const double bdir = dir == Axis::x ? w.bx : w.by;
  const double vdotb = w.vx * w.bx + w.vy * w.by;
  return (0.5 * sq + g * w.h + g * b) * w.h * vdir - w.h * bdir * vdotb;
}

double entropy_potential(const PrimitiveState& w, double g, Axis dir) {
  return 0.5 * g * w.h * w.h * (dir == Axis::x ? w.vx : w.vy);
}

Vec5 physical_flux(const PrimitiveState& w, double g, Axis dir) {
  if (dir == Axis::y) return swap_axes(physical_flux(swap_axes(w), g, Axis::x));
  const double hv = w.h * w.vx;
  const double hb = w.h * w.bx;
  return {hv,
          hv * w.vx - hb * w.bx + 0.5 * g * w.h * w.h,
          hv * w.vy - hb * w.by,
          0.0,
          hv * w.by - hb * w.vy};
}

double phi(const EntropyVars& v) { return v.v2 * v.v4 + v.v3 * v.v5; }

}  // namespace swmhd
