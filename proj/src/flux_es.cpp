#include "swmhd/flux_es.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "swmhd/errors.hpp"

namespace swmhd {

namespace {

constexpr double kWenoEps = 1e-40;

inline double sqr(double x) { return x * x; }

// Left-biased WENO-Z point-value interpolation to x_{i+1/2} from a_{i-2..i+2}.
inline double wenoz_left(double am2, double am1, double a0, double ap1, double ap2) {
  // candidate quadratics through each 3-point sub-stencil, evaluated at i+1/2
  const double q0 = (3.0 * am2 - 10.0 * am1 + 15.0 * a0) / 8.0;
  const double q1 = (-am1 + 6.0 * a0 + 3.0 * ap1) / 8.0;
  const double q2 = (3.0 * a0 + 6.0 * ap1 - ap2) / 8.0;

  const double beta0 = 13.0 / 12.0 * sqr(am2 - 2.0 * am1 + a0) + 0.25 * sqr(am2 - 4.0 * am1 + 3.0 * a0);
  const double beta1 = 13.0 / 12.0 * sqr(am1 - 2.0 * a0 + ap1) + 0.25 * sqr(am1 - ap1);
  const double beta2 = 13.0 / 12.0 * sqr(a0 - 2.0 * ap1 + ap2) + 0.25 * sqr(3.0 * a0 - 4.0 * ap1 + ap2);
  const double tau5 = std::abs(beta0 - beta2);

  const double w0 = (1.0 / 16.0) * (1.0 + sqr(tau5 / (beta0 + kWenoEps)));
  const double w1 = (10.0 / 16.0) * (1.0 + sqr(tau5 / (beta1 + kWenoEps)));
  const double w2 = (5.0 / 16.0) * (1.0 + sqr(tau5 / (beta2 + kWenoEps)));
  return (w0 * q0 + w1 * q1 + w2 * q2) / (w0 + w1 + w2);
}

inline double sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

Mat5 cholesky_R(const PrimitiveState& w, double g) {
  if (!(w.h > 0.0)) throw NonPositiveHeight(w.h);
  const double isg = 1.0 / std::sqrt(g);
  const double sh = std::sqrt(w.h);
  Mat5 r{};
  r[0][0] = isg;
  r[1][0] = w.vx * isg;
  r[2][0] = w.vy * isg;
  r[3][0] = w.bx * isg;
  r[4][0] = w.by * isg;
  for (int l = 1; l < 5; ++l) r[l][l] = sh;
  return r;
}

double local_alpha(const PrimitiveState& wl, const PrimitiveState& wr, double g, Axis dir) {
  auto speed = [&](const PrimitiveState& w) {
    if (!(w.h > 0.0)) throw NonPositiveHeight(w.h);
    const double v = dir == Axis::x ? w.vx : w.vy;
    const double b = dir == Axis::x ? w.bx : w.by;
    return std::abs(v) + std::sqrt(g * w.h + b * b);
  };
  return std::max(speed(wl), speed(wr));
}

double weno5_interp(std::span<const double, 5> a, Side side) {
  if (side == Side::left) return wenoz_left(a[0], a[1], a[2], a[3], a[4]);
  return wenoz_left(a[4], a[3], a[2], a[1], a[0]);
}

Vec5 mat_vec(const Mat5& m, const Vec5& x) {
  Vec5 y{};
  for (int l = 0; l < 5; ++l)
    for (int c = 0; c < 5; ++c) y[l] += m[l][c] * x[c];
  return y;
}

namespace {

// R^T V for the closed-form R: the first row couples every component, the
// rest is diagonal.
inline Vec5 scaled_vars(const Mat5& r, const EntropyVars& v) {
  return {r[0][0] * v.v1 + r[1][0] * v.v2 + r[2][0] * v.v3 + r[3][0] * v.v4 + r[4][0] * v.v5,
          r[1][1] * v.v2, r[2][2] * v.v3, r[3][3] * v.v4, r[4][4] * v.v5};
}

}  // namespace

ReconstructedJump scaled_entropy_jump(std::span<const EntropyVars> v, const Mat5& r) {
  if (v.size() != 6) throw SolverError("scaled_entropy_jump needs six nodes i-2..i+3");
  std::array<Vec5, 6> w;
  for (std::size_t j = 0; j < 6; ++j) w[j] = scaled_vars(r, v[j]);
  ReconstructedJump out;
  for (int l = 0; l < 5; ++l) {
    const double minus = wenoz_left(w[0][l], w[1][l], w[2][l], w[3][l], w[4][l]);
    const double plus = wenoz_left(w[5][l], w[4][l], w[3][l], w[2][l], w[1][l]);
    out.jump[l] = plus - minus;
    out.raw_jump[l] = w[3][l] - w[2][l];
  }
  return out;
}

Vec5 sign_switch(const Vec5& jump, const Vec5& raw) {
  Vec5 s{};
  for (int l = 0; l < 5; ++l) {
    const double sr = sign_of(raw[l]);
    s[l] = (sr != 0.0 && sign_of(jump[l]) == sr) ? 1.0 : 0.0;
  }
  return s;
}

int es_half_order(int k) {
  if (k != 5) throw UnsupportedOrder("ES order k = " + std::to_string(k) + " (only k = 5)");
  return (k + 1) / 2;
}

EsFluxParts es_flux_parts(const EsFluxStencil& st, int p, int k, double g, Axis dir) {
  es_half_order(k);
  if (st.states.size() != 6 || st.topo.size() != 6)
    throw SolverError("es_flux needs a six-node stencil");
  std::array<PrimitiveState, 6> w;
  for (std::size_t j = 0; j < 6; ++j)
    w[j] = dir == Axis::x ? st.states[j] : swap_axes(st.states[j]);

  // the EC part only needs the innermost 2p nodes
  const std::size_t off = 3 - static_cast<std::size_t>(p);
  const EcFluxStencil ec{std::span<const PrimitiveState>(w).subspan(off, 2 * p),
                         st.topo.subspan(off, 2 * p)};
  EsFluxParts parts;
  parts.ec = high_order_ec_flux(ec, p, g);

  std::array<EntropyVars, 6> v;
  for (std::size_t j = 0; j < 6; ++j) v[j] = entropy_vars(w[j], st.topo[j], g);
  const PrimitiveState& wl = w[2];
  const PrimitiveState& wr = w[3];
  const PrimitiveState mean = PrimitiveState::from_array(0.5 * (wl.to_array() + wr.to_array()));
  const Mat5 r = cholesky_R(mean, g);
  const double alpha = local_alpha(wl, wr, g, Axis::x);
  const ReconstructedJump j = scaled_entropy_jump(v, r);
  const Vec5 s = sign_switch(j.jump, j.raw_jump);
  Vec5 sj;
  for (int l = 0; l < 5; ++l) sj[l] = s[l] * j.jump[l];
  parts.dissipation = (-0.5 * alpha) * mat_vec(r, sj);

  if (dir == Axis::y) {
    parts.ec = swap_axes(parts.ec);
    parts.dissipation = swap_axes(parts.dissipation);
  }
  return parts;
}

Vec5 es_flux(const EsFluxStencil& st, int p, int k, double g, Axis dir) {
  const EsFluxParts parts = es_flux_parts(st, p, k, g, dir);
  return parts.ec + parts.dissipation;
}

Vec5 lf_flux(const PrimitiveState& wl, const PrimitiveState& wr, double, double, double g,
             Axis dir) {
  const double alpha = local_alpha(wl, wr, g, dir);
  const Vec5 fl = physical_flux(wl, g, dir);
  const Vec5 fr = physical_flux(wr, g, dir);
  const Vec5 du = prim_to_cons(wr).to_array() - prim_to_cons(wl).to_array();
  return 0.5 * (fl + fr) - (0.5 * alpha) * du;
}

}  // namespace swmhd
