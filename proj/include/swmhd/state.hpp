#pragma once
// Variable systems of the shallow water MHD equations with the Janhunen
// source term: conserved U = (h, hv, hB), primitive (h, v, B), entropy
// variables V = dη/dU, and the total-energy entropy pair.

#include <array>
#include <cstddef>

namespace swmhd {

using Vec5 = std::array<double, 5>;

enum class Axis { x, y };

struct ConservedState {
  double h = 0.0;
  double mx = 0.0;  // h vx
  double my = 0.0;  // h vy
  double px = 0.0;  // h Bx
  double py = 0.0;  // h By

  Vec5 to_array() const { return {h, mx, my, px, py}; }
  static ConservedState from_array(const Vec5& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

struct PrimitiveState {
  double h = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double bx = 0.0;  // magnetic field in velocity units
  double by = 0.0;

  Vec5 to_array() const { return {h, vx, vy, bx, by}; }
  static PrimitiveState from_array(const Vec5& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

struct EntropyVars {
  double v1 = 0.0;  // g(h+b) - (|v|^2 + |B|^2)/2
  double v2 = 0.0;  // vx
  double v3 = 0.0;  // vy
  double v4 = 0.0;  // Bx
  double v5 = 0.0;  // By

  Vec5 to_array() const { return {v1, v2, v3, v4, v5}; }
  static EntropyVars from_array(const Vec5& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
};

struct PhysicalConstants {
  double g = 1.0;
};

// Vec5 arithmetic, used by the flux kernels.
inline Vec5 operator+(const Vec5& a, const Vec5& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline Vec5 operator-(const Vec5& a, const Vec5& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline Vec5 operator*(double s, const Vec5& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline Vec5& operator+=(Vec5& a, const Vec5& b) {
  for (std::size_t l = 0; l < 5; ++l) a[l] += b[l];
  return a;
}
inline double dot(const Vec5& a, const Vec5& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3] + a[4] * b[4];
}

/// Throws NonPositiveHeight when u.h <= 0.
PrimitiveState cons_to_prim(const ConservedState& u);
PrimitiveState cons_to_prim(const Vec5& u);
ConservedState prim_to_cons(const PrimitiveState& w);

EntropyVars entropy_vars(const PrimitiveState& w, double b, double g);

/// η = h(|v|^2+|B|^2)/2 + g h^2/2 + g h b.
double entropy(const ConservedState& u, double b, double g);

/// q_dir = ((|v|^2+|B|^2)/2 + g h + g b) h v_dir - h B_dir (v.B).
double entropy_flux(const PrimitiveState& w, double b, double g, Axis dir);

/// ψ_dir = g h^2 v_dir / 2.
double entropy_potential(const PrimitiveState& w, double g, Axis dir);

Vec5 physical_flux(const PrimitiveState& w, double g, Axis dir);

/// Φ(V) = v.B, the value Ψ V of the Janhunen coefficient vector.
double phi(const EntropyVars& v);

// Rotation between the x and y frames: swaps (vx, vy) and (Bx, By). Applying
// it twice is the identity. The y-direction kernels are the x kernels
// conjugated by this swap.
inline PrimitiveState swap_axes(const PrimitiveState& w) { return {w.h, w.vy, w.vx, w.by, w.bx}; }
inline ConservedState swap_axes(const ConservedState& u) { return {u.h, u.my, u.mx, u.py, u.px}; }
inline Vec5 swap_axes(const Vec5& a) { return {a[0], a[2], a[1], a[4], a[3]}; }

}  // namespace swmhd
