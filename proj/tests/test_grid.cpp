#include <doctest.h>

#include "swmhd/errors.hpp"
#include "swmhd/grid.hpp"

using namespace swmhd;

TEST_CASE("node positions") {
  Grid c(10, 0.0, 1.0);
  CHECK(c.dx() == doctest::Approx(0.1));
  CHECK(c.x(0) == doctest::Approx(0.05));
  CHECK(c.x(9) == doctest::Approx(0.95));
  Grid v(10, 0.0, 1.0, 0.0);
  CHECK(v.x(0) == 0.0);
  CHECK(v.x(10) == doctest::Approx(1.0));
  CHECK_THROWS_AS(Grid(10, 0.0, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(Grid(10, 0.0, 1.0, -0.1), ConfigError);
  Grid g2(4, 8, 0.0, 1.0, -1.0, 1.0);
  CHECK(g2.dims() == 2);
  CHECK(g2.dy() == doctest::Approx(0.25));
  CHECK(g2.y(0) == doctest::Approx(-0.875));
  CHECK(c.dims() == 1);
  CHECK(c.ny() == 1);
}

TEST_CASE("periodic and outflow ghosts, 1D") {
  Grid g(6, 0.0, 1.0);
  for (int i = 0; i < 6; ++i) {
    g.set_cons(i, 0, {1.0 + i, double(i), 0, 0, 0});
    g.set_topo(i, 0, 0.1 * i);
  }
  apply_bc(g, Boundary::periodic);
  for (int k = 1; k <= Grid::kGhost; ++k) {
    CHECK(g.cons(-k).h == g.cons(6 - k).h);
    CHECK(g.cons(5 + k).h == g.cons(k - 1).h);
    CHECK(g.topo(-k) == g.topo(6 - k));
  }
  apply_bc(g, Boundary::outflow);
  for (int k = 1; k <= Grid::kGhost; ++k) {
    CHECK(g.cons(-k) == g.cons(0));
    CHECK(g.cons(5 + k) == g.cons(5));
    CHECK(g.topo(5 + k) == g.topo(5));
  }
  CHECK(g.min_height() == 1.0);
}

TEST_CASE("periodic ghosts, 2D") {
  Grid g(5, 4, 0, 1, 0, 1);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 5; ++i) g.set_cons(i, j, {1.0 + i + 10.0 * j, 0, 0, 0, 0});
  apply_bc(g, Boundary::periodic);
  for (int k = 1; k <= Grid::kGhost; ++k)
    for (int j = 0; j < 4; ++j) {
      CHECK(g.cons(-k, j).h == g.cons(5 - k, j).h);
      CHECK(g.cons(4 + k, j).h == g.cons(k - 1, j).h);
    }
  for (int k = 1; k <= Grid::kGhost; ++k)
    for (int i = 0; i < 5; ++i) {
      CHECK(g.cons(i, -k).h == g.cons(i, 4 - k).h);
      CHECK(g.cons(i, 3 + k).h == g.cons(i, k - 1).h);
    }
  CHECK(g.min_height() == 1.0);
}
