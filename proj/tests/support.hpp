#pragma once
// Helpers shared by the unit tests and the acceptance binary: random states
// and small long-double oracles written independently of the library.

#include <cmath>
#include <random>

#include "swmhd/state.hpp"

namespace swmhd::testing {

struct StateSampler {
  std::mt19937_64 rng;
  double h_lo = 0.1, h_hi = 10.0;
  double vmax = 5.0, bmax = 5.0;
  double topo = 1.0;

  explicit StateSampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  PrimitiveState state() {
    return {uniform(h_lo, h_hi), uniform(-vmax, vmax), uniform(-vmax, vmax), uniform(-bmax, bmax),
            uniform(-bmax, bmax)};
  }
  double bottom() { return uniform(-topo, topo); }
};

using LVec5 = std::array<long double, 5>;

// U as a function of V = (v1..v5) for b = 0: v = (v2, v3), B = (v4, v5),
// h = (v1 + (|v|^2 + |B|^2)/2) / g.
inline LVec5 cons_of_entropy_vars(const LVec5& v, long double g) {
  const long double kin = 0.5L * (v[1] * v[1] + v[2] * v[2] + v[3] * v[3] + v[4] * v[4]);
  const long double h = (v[0] + kin) / g;
  return {h, h * v[1], h * v[2], h * v[3], h * v[4]};
}

// Residual of the two-point EC condition in x, evaluated in long double.
inline long double ec_residual_ld(const Vec5& f, const PrimitiveState& a, const PrimitiveState& c,
                                  double ba, double bc, double gd) {
  const long double g = gd;
  auto V = [&](const PrimitiveState& w, long double b) -> LVec5 {
    const long double vx = w.vx, vy = w.vy, bx = w.bx, by = w.by, h = w.h;
    return {g * (h + b) - 0.5L * (vx * vx + vy * vy + bx * bx + by * by), vx, vy, bx, by};
  };
  const LVec5 va = V(a, ba), vc = V(c, bc);
  long double r = 0.0L;
  for (int l = 0; l < 5; ++l) r += (vc[l] - va[l]) * static_cast<long double>(f[l]);
  auto psi = [&](const PrimitiveState& w) { return 0.5L * g * (long double)w.h * w.h * w.vx; };
  auto Phi = [](const PrimitiveState& w) { return (long double)w.vx * w.bx + (long double)w.vy * w.by; };
  const long double hbx_mean = 0.5L * ((long double)a.h * a.bx + (long double)c.h * c.bx);
  const long double b_mean = 0.5L * ((long double)ba + bc);
  r -= psi(c) - psi(a);
  r += (Phi(c) - Phi(a)) * hbx_mean;
  r -= g * ((long double)c.h * bc * c.vx - (long double)a.h * ba * a.vx);
  r += g * ((long double)c.h * c.vx - (long double)a.h * a.vx) * b_mean;
  return r;
}

}  // namespace swmhd::testing
