#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "swmhd/state.hpp"

namespace swmhd {

enum class Boundary { periodic, outflow };

/// Uniform node lattice on [x0, x1] (x [y0, y1] in 2D) with ghost layers.
/// Node i sits at x0 + (i + offset) dx, offset 1/2 (cell centres) by default
/// or 0 (x0 is a node, x1 its periodic image). Interior indices run 0..nx-1,
/// ghosts -kGhost..-1 and nx..nx+kGhost-1. A 1D grid has ny = 1 and no y
/// ghosts.
///
/// Storage is one array per conserved component plus one for the bottom
/// topography, x fastest. A y-sweep therefore reads with stride row_stride().
class Grid {
 public:
  static constexpr int kGhost = 3;

  Grid() = default;
  Grid(int nx, double x0, double x1, double offset = 0.5);
  Grid(int nx, int ny, double x0, double x1, double y0, double y1, double offset = 0.5);

  int dims() const noexcept { return dims_; }
  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  double x(int i) const noexcept { return x0_ + (i + offset_) * dx_; }
  double y(int j) const noexcept { return y0_ + (j + offset_) * dy_; }
  double node_offset() const noexcept { return offset_; }
  double x0() const noexcept { return x0_; }
  double x1() const noexcept { return x1_; }
  double y0() const noexcept { return y0_; }
  double y1() const noexcept { return y1_; }
  int ghost_y() const noexcept { return gy_; }

  std::size_t row_stride() const noexcept { return static_cast<std::size_t>(nx_ + 2 * kGhost); }
  std::size_t size() const noexcept { return row_stride() * static_cast<std::size_t>(ny_ + 2 * gy_); }
  std::size_t index(int i, int j = 0) const noexcept {
    return static_cast<std::size_t>(j + gy_) * row_stride() + static_cast<std::size_t>(i + kGhost);
  }

  ConservedState cons(int i, int j = 0) const noexcept {
    const std::size_t n = index(i, j);
    return {u_[0][n], u_[1][n], u_[2][n], u_[3][n], u_[4][n]};
  }
  void set_cons(int i, int j, const ConservedState& u) noexcept {
    const std::size_t n = index(i, j);
    u_[0][n] = u.h;
    u_[1][n] = u.mx;
    u_[2][n] = u.my;
    u_[3][n] = u.px;
    u_[4][n] = u.py;
  }
  double topo(int i, int j = 0) const noexcept { return topo_[index(i, j)]; }
  void set_topo(int i, int j, double b) noexcept { topo_[index(i, j)] = b; }

  std::array<std::vector<double>, 5>& fields() noexcept { return u_; }
  const std::array<std::vector<double>, 5>& fields() const noexcept { return u_; }
  std::vector<double>& topography() noexcept { return topo_; }
  const std::vector<double>& topography() const noexcept { return topo_; }

  /// Smallest interior height.
  double min_height() const;

 private:
  int dims_ = 1;
  int nx_ = 0;
  int ny_ = 1;
  int gy_ = 0;
  double x0_ = 0.0, x1_ = 1.0, y0_ = 0.0, y1_ = 1.0;
  double dx_ = 1.0, dy_ = 1.0;
  double offset_ = 0.5;
  std::array<std::vector<double>, 5> u_;
  std::vector<double> topo_;
};

/// Fills the ghost layers of the fields and of the topography.
/// periodic: wraparound copy; outflow: copy of the nearest interior node.
void apply_bc(Grid& grid, Boundary bc);

}  // namespace swmhd
