#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "swmhd/errors.hpp"
#include "swmhd/flux_ec.hpp"

using namespace swmhd;

namespace {

// Two-point flux written out directly from the mean-value formulas.
Vec5 ec_flux_oracle(const PrimitiveState& a, const PrimitiveState& c, double ba, double bc, double g) {
  auto m = [](long double x, long double y) { return 0.5L * (x + y); };
  const long double h = m(a.h, c.h), vx = m(a.vx, c.vx), vy = m(a.vy, c.vy), bx = m(a.bx, c.bx),
                    by = m(a.by, c.by);
  const long double h2 = m((long double)a.h * a.h, (long double)c.h * c.h);
  const long double hbx = m((long double)a.h * a.bx, (long double)c.h * c.bx);
  const long double hb = m((long double)a.h * ba, (long double)c.h * bc);
  const long double b = m(ba, bc);
  return {double(h * vx), double(h * vx * vx + 0.5L * g * h2 - hbx * bx + g * (hb - h * b)),
          double(h * vx * vy - hbx * by), double(h * vx * bx - hbx * vx), double(h * vx * by - hbx * vy)};
}

// Smooth periodic profile on [0, 1] and its derivative.
struct Profile {
  static constexpr double k = 2.0 * std::numbers::pi;
  PrimitiveState w(double x) const {
    return {1.0 + 0.2 * std::sin(k * x), 0.3 + 0.1 * std::cos(k * x), 0.2 * std::sin(k * x),
            0.5 + 0.1 * std::cos(k * x), 0.3 * std::sin(k * x)};
  }
  PrimitiveState dw(double x) const {
    return {0.2 * k * std::cos(k * x), -0.1 * k * std::sin(k * x), 0.2 * k * std::cos(k * x),
            -0.1 * k * std::sin(k * x), 0.3 * k * std::cos(k * x)};
  }
  // d/dx of the physical x flux, by the chain rule.
  Vec5 dflux(double x, double g) const {
    const PrimitiveState s = w(x), d = dw(x);
    const double h = s.h, vx = s.vx, vy = s.vy, bx = s.bx, by = s.by;
    return {d.h * vx + h * d.vx,
            d.h * vx * vx + 2 * h * vx * d.vx + g * h * d.h - d.h * bx * bx - 2 * h * bx * d.bx,
            d.h * vx * vy + h * d.vx * vy + h * vx * d.vy - d.h * bx * by - h * d.bx * by - h * bx * d.by,
            0.0,
            d.h * vx * by + h * d.vx * by + h * vx * d.by - d.h * bx * vy - h * d.bx * vy - h * bx * d.vy};
  }
};

double max_flux_derivative_error(int p, int n, double g) {
  const Profile prof;
  const double dx = 1.0 / n;
  double err = 0.0;
  std::vector<PrimitiveState> win(2 * p + 1);
  std::vector<double> zero(2 * p + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    // nodes i-p .. i+p; interface i-1/2 uses [0, 2p), i+1/2 uses [1, 2p+1)
    for (int j = 0; j <= 2 * p; ++j) win[j] = prof.w((i - p + j) * dx);
    const std::span<const PrimitiveState> all(win);
    const std::span<const double> tz(zero);
    const Vec5 fl = high_order_ec_flux({all.subspan(0, 2 * p), tz.subspan(0, 2 * p)}, p, g);
    const Vec5 fr = high_order_ec_flux({all.subspan(1, 2 * p), tz.subspan(1, 2 * p)}, p, g);
    const Vec5 ex = prof.dflux(i * dx, g);
    for (int l = 0; l < 5; ++l) err = std::max(err, std::abs((fr[l] - fl[l]) / dx - ex[l]));
  }
  return err;
}

}  // namespace

TEST_CASE("combination coefficients") {
  CHECK(combination_coeffs(1).alpha == std::vector<double>{1.0});
  const auto c2 = combination_coeffs(2).alpha;
  CHECK(c2[0] == doctest::Approx(4.0 / 3.0));
  CHECK(c2[1] == doctest::Approx(-1.0 / 6.0));
  const auto c3 = combination_coeffs(3).alpha;
  CHECK(c3[0] == doctest::Approx(1.5));
  CHECK(c3[1] == doctest::Approx(-0.3));
  CHECK(c3[2] == doctest::Approx(1.0 / 30.0));
  for (int p = 1; p <= 3; ++p) {
    const auto a = combination_coeffs(p).alpha;
    double s1 = 0.0, s3 = 0.0, s5 = 0.0;
    for (int r = 1; r <= p; ++r) {
      s1 += r * a[r - 1];
      s3 += r * r * r * a[r - 1];
      s5 += std::pow(r, 5) * a[r - 1];
    }
    CHECK(s1 == doctest::Approx(1.0));
    if (p >= 2) CHECK(std::abs(s3) < 1e-14);
    if (p >= 3) CHECK(std::abs(s5) < 1e-13);
  }
  CHECK_THROWS_AS(combination_coeffs(0), UnsupportedOrder);
  CHECK_THROWS_AS(combination_coeffs(4), UnsupportedOrder);
}

TEST_CASE("two-point EC flux: consistency, symmetry, formula") {
  const PrimitiveState w{2, 1, 0, 0.5, 1};
  const Vec5 f = ec_flux_x(w, w, 0.0, 0.0, 1.0);
  const Vec5 expect{2, 3.5, -1, 0, 2};
  for (int l = 0; l < 5; ++l) CHECK(f[l] == doctest::Approx(expect[l]));

  testing::StateSampler s(21);
  for (int n = 0; n < 2000; ++n) {
    const PrimitiveState a = s.state(), c = s.state();
    const double ba = s.bottom(), bc = s.bottom();
    CHECK(ec_flux_x(a, c, ba, bc, 9.812) == ec_flux_x(c, a, bc, ba, 9.812));
    const Vec5 lib = ec_flux_x(a, c, ba, bc, 9.812);
    const Vec5 ora = ec_flux_oracle(a, c, ba, bc, 9.812);
    for (int l = 0; l < 5; ++l) CHECK(lib[l] == doctest::Approx(ora[l]).epsilon(1e-12).scale(10.0));
    // equal states, any bottom: physical flux
    const Vec5 fe = ec_flux_x(a, a, ba, ba, 9.812);
    const Vec5 fp = physical_flux(a, 9.812, Axis::x);
    for (int l = 0; l < 5; ++l) CHECK(fe[l] == doctest::Approx(fp[l]).epsilon(1e-13).scale(1.0));
  }
  CHECK_THROWS_AS(ec_flux_x(PrimitiveState{0, 0, 0, 0, 0}, w, 0, 0, 1), NonPositiveHeight);
}

TEST_CASE("two-point EC flux reduces to the shallow water EC flux for B = 0") {
  testing::StateSampler s(22);
  s.bmax = 0.0;
  for (int n = 0; n < 500; ++n) {
    PrimitiveState a = s.state(), c = s.state();
    a.bx = a.by = c.bx = c.by = 0.0;
    const double ba = s.bottom(), bc = s.bottom(), g = 9.812;
    const double h = 0.5 * (a.h + c.h), vx = 0.5 * (a.vx + c.vx), vy = 0.5 * (a.vy + c.vy);
    const double h2 = 0.5 * (a.h * a.h + c.h * c.h), hb = 0.5 * (a.h * ba + c.h * bc), b = 0.5 * (ba + bc);
    const Vec5 f = ec_flux_x(a, c, ba, bc, g);
    CHECK(f[0] == doctest::Approx(h * vx));
    CHECK(f[1] == doctest::Approx(h * vx * vx + 0.5 * g * h2 + g * (hb - h * b)));
    CHECK(f[2] == doctest::Approx(h * vx * vy));
    CHECK(f[3] == 0.0);
    CHECK(f[4] == 0.0);
  }
}

TEST_CASE("EC condition holds to round-off on random pairs") {
  testing::StateSampler s(23);
  for (double g : {1.0, 9.812}) {
    double worst = 0.0, worst_ld = 0.0, worst_y = 0.0;
    for (int n = 0; n < 10000; ++n) {
      const PrimitiveState a = s.state(), c = s.state();
      const double ba = s.bottom(), bc = s.bottom();
      const Vec5 f = ec_flux_x(a, c, ba, bc, g);
      worst = std::max(worst, std::abs(entropy_condition_residual(f, a, c, ba, bc, g)));
      worst_ld = std::max(worst_ld, double(std::abs(testing::ec_residual_ld(f, a, c, ba, bc, g))));
      // y condition is the x condition of the swapped frame
      const Vec5 fy = ec_flux_y(a, c, ba, bc, g);
      worst_y = std::max(worst_y, double(std::abs(testing::ec_residual_ld(
                                      swap_axes(fy), swap_axes(a), swap_axes(c), ba, bc, g))));
    }
    // the double evaluation itself cancels terms of size g h^2 |v|
    CHECK(worst < 1e-11);
    CHECK(worst_ld < 1e-12);
    CHECK(worst_y < 1e-12);
  }
}

TEST_CASE("y flux: consistency and rotational oracle") {
  testing::StateSampler s(24);
  for (int n = 0; n < 500; ++n) {
    const PrimitiveState a = s.state(), c = s.state();
    const double ba = s.bottom(), bc = s.bottom();
    const Vec5 fy = ec_flux_y(a, c, ba, bc, 1.0);
    const Vec5 rot = swap_axes(ec_flux_x(swap_axes(a), swap_axes(c), ba, bc, 1.0));
    CHECK(fy == rot);
    CHECK(ec_flux(a, c, ba, bc, 1.0, Axis::y) == fy);
    const Vec5 fe = ec_flux_y(a, a, ba, ba, 1.0);
    const Vec5 fp = physical_flux(a, 1.0, Axis::y);
    for (int l = 0; l < 5; ++l) CHECK(fe[l] == doctest::Approx(fp[l]).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("high-order EC flux") {
  const PrimitiveState w{1.3, 0.2, -0.4, 0.7, 0.1};
  for (int p = 1; p <= 3; ++p) {
    std::vector<PrimitiveState> st(2 * p, w);
    std::vector<double> b(2 * p, 0.25);
    const Vec5 f = high_order_ec_flux({st, b}, p, 2.0);
    const Vec5 fp = physical_flux(w, 2.0, Axis::x);
    for (int l = 0; l < 5; ++l) CHECK(f[l] == doctest::Approx(fp[l]).epsilon(1e-14).scale(1.0));
  }
  testing::StateSampler s(25);
  const PrimitiveState a = s.state(), c = s.state();
  const std::vector<PrimitiveState> two{a, c};
  const std::vector<double> bb{0.1, -0.2};
  CHECK(high_order_ec_flux({two, bb}, 1, 1.0) == ec_flux_x(a, c, 0.1, -0.2, 1.0));
  CHECK_THROWS_AS(high_order_ec_flux({two, bb}, 4, 1.0), UnsupportedOrder);
}

TEST_CASE("high-order EC flux difference converges at order 2p") {
  for (int p = 1; p <= 3; ++p) {
    const double e1 = max_flux_derivative_error(p, 16, 1.0);
    const double e2 = max_flux_derivative_error(p, 32, 1.0);
    const double e3 = max_flux_derivative_error(p, 64, 1.0);
    const double o1 = std::log2(e1 / e2), o2 = std::log2(e2 / e3);
    INFO("p = " << p << " orders " << o1 << ", " << o2);
    CHECK(o2 >= 2 * p - 0.2);
  }
}

TEST_CASE("high-order source mean") {
  for (int p = 1; p <= 3; ++p) {
    std::vector<double> a(2 * p, 0.625);
    CHECK(high_order_source_mean(a, p) == doctest::Approx(0.625).epsilon(1e-15));
  }
  const std::vector<double> two{1.0, 4.0};
  CHECK(high_order_source_mean(two, 1) == 2.5);
  CHECK_THROWS_AS(high_order_source_mean(two, 5), UnsupportedOrder);

  // divided difference approximates a'(x) at order 2p
  auto err = [](int p, int n) {
    const double dx = 1.0 / n, k = 2.0 * std::numbers::pi;
    double e = 0.0;
    std::vector<double> win(2 * p + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= 2 * p; ++j) win[j] = std::exp(std::sin(k * (i - p + j) * dx));
      const std::span<const double> all(win);
      const double d = (high_order_source_mean(all.subspan(1, 2 * p), p) -
                        high_order_source_mean(all.subspan(0, 2 * p), p)) / dx;
      const double x = i * dx;
      e = std::max(e, std::abs(d - k * std::cos(k * x) * std::exp(std::sin(k * x))));
    }
    return e;
  };
  for (int p = 1; p <= 3; ++p) {
    const double o = std::log2(err(p, 32) / err(p, 64));
    INFO("p = " << p << " order " << o);
    CHECK(o >= 2 * p - 0.2);
  }
}

TEST_CASE("numerical entropy flux") {
  testing::StateSampler s(26);
  for (int n = 0; n < 200; ++n) {
    const PrimitiveState a = s.state();
    const double b = s.bottom();
    CHECK(numerical_entropy_flux(a, a, b, b, 1.5) ==
          doctest::Approx(entropy_flux(a, b, 1.5, Axis::x)).epsilon(1e-12).scale(1.0));
  }
  // lake at rest
  CHECK(numerical_entropy_flux(PrimitiveState{0.8, 0, 0, 0, 0}, PrimitiveState{0.6, 0, 0, 0, 0}, 0.2,
                               0.4, 1.0) == doctest::Approx(0.0).scale(1.0));
}
