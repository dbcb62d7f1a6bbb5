#include "swmhd/grid.hpp"

#include <algorithm>
#include <limits>

#include "swmhd/errors.hpp"

namespace swmhd {

Grid::Grid(int nx, double x0, double x1, double offset)
    : dims_(1), nx_(nx), ny_(1), gy_(0), x0_(x0), x1_(x1), offset_(offset) {
  if (offset < 0.0 || offset >= 1.0) throw ConfigError("node offset must lie in [0, 1)");
  if (nx < 1) throw ConfigError("grid needs nx >= 1");
  if (!(x1 > x0)) throw ConfigError("grid needs x1 > x0");
  dx_ = (x1 - x0) / nx;
  for (auto& c : u_) c.assign(size(), 0.0);
  topo_.assign(size(), 0.0);
}

Grid::Grid(int nx, int ny, double x0, double x1, double y0, double y1, double offset)
    : dims_(2), nx_(nx), ny_(ny), gy_(kGhost), x0_(x0), x1_(x1), y0_(y0), y1_(y1), offset_(offset) {
  if (offset < 0.0 || offset >= 1.0) throw ConfigError("node offset must lie in [0, 1)");
  if (nx < 1 || ny < 1) throw ConfigError("grid needs nx, ny >= 1");
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("grid needs a non-empty domain");
  dx_ = (x1 - x0) / nx;
  dy_ = (y1 - y0) / ny;
  for (auto& c : u_) c.assign(size(), 0.0);
  topo_.assign(size(), 0.0);
}

double Grid::min_height() const {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) m = std::min(m, u_[0][index(i, j)]);
  return m;
}

namespace {

int source_index(int i, int n, Boundary bc) {
  if (bc == Boundary::periodic) return ((i % n) + n) % n;
  return std::clamp(i, 0, n - 1);
}

template <class F>
void for_each_array(Grid& grid, F&& f) {
  for (auto& c : grid.fields()) f(c);
  f(grid.topography());
}

}  // namespace

void apply_bc(Grid& grid, Boundary bc) {
  const int g = Grid::kGhost;
  const int nx = grid.nx();
  const int ny = grid.ny();
  for_each_array(grid, [&](std::vector<double>& a) {
    for (int j = 0; j < ny; ++j) {
      for (int i = -g; i < 0; ++i) a[grid.index(i, j)] = a[grid.index(source_index(i, nx, bc), j)];
      for (int i = nx; i < nx + g; ++i)
        a[grid.index(i, j)] = a[grid.index(source_index(i, nx, bc), j)];
    }
    if (grid.dims() == 2) {
      for (int i = -g; i < nx + g; ++i) {
        for (int j = -g; j < 0; ++j) a[grid.index(i, j)] = a[grid.index(i, source_index(j, ny, bc))];
        for (int j = ny; j < ny + g; ++j)
          a[grid.index(i, j)] = a[grid.index(i, source_index(j, ny, bc))];
      }
    }
  });
}

}  // namespace swmhd
