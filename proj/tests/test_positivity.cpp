#include <doctest.h>

#include "support.hpp"
#include "swmhd/errors.hpp"
#include "swmhd/flux_es.hpp"
#include "swmhd/positivity.hpp"

using namespace swmhd;

TEST_CASE("split heights recombine to the forward-Euler update") {
  const double h = 1.3, fl = 0.4, fr = -0.7, lam = 0.25;
  const SplitHeights s = split_heights(h, fl, fr, lam);
  CHECK(0.5 * (s.minus + s.plus) == doctest::Approx(h - lam * (fr - fl)));
  CHECK(s.plus == doctest::Approx(h - 2 * lam * fr));
  CHECK(s.minus == doctest::Approx(h + 2 * lam * fl));
}

TEST_CASE("LF half heights stay positive at mu = 1/2") {
  testing::StateSampler s(41);
  for (int n = 0; n < 10000; ++n) {
    const PrimitiveState a = s.state(), c = s.state();
    const double alpha = local_alpha(a, c, 1.0, Axis::x);
    const double lam = 0.5 / alpha;
    const double f = lf_flux(a, c, 0, 0, 1.0, Axis::x)[0];
    CHECK(split_heights(a.h, 0.0, f, lam).plus > 0.0);
    CHECK(split_heights(c.h, f, 0.0, lam).minus > 0.0);
  }
}

TEST_CASE("theta") {
  const double eps = kDefaultDryEps;
  InterfaceHeights lf{0.5, 1.0}, kth{-0.1, 1.0};
  const double th = pp_theta(lf, kth, eps);
  CHECK(th == doctest::Approx((0.5 - eps) / 0.6).epsilon(1e-15));
  CHECK(th == doctest::Approx(0.8333333333333).epsilon(1e-12));
  // the blended height sits on the constraint
  CHECK(th * kth.left_plus + (1 - th) * lf.left_plus == doctest::Approx(eps).epsilon(1e-3));
  CHECK(th * kth.left_plus + (1 - th) * lf.left_plus >= eps * (1 - 1e-3));

  CHECK(pp_theta({0.5, 0.5}, {0.2, 0.3}, eps) == 1.0);
  // mirrored on the other side, minimum wins
  CHECK(pp_theta({0.5, 0.4}, {0.1, -0.4}, eps) == doctest::Approx((0.4 - eps) / 0.8));
  CHECK(pp_theta({1.0, 1.0}, {-1.0, -3.0}, eps) == doctest::Approx((1.0 - eps) / 4.0));
  CHECK_THROWS_AS(pp_theta({0.0, 1.0}, {0.5, 0.5}, eps), InvalidLF);
  CHECK_THROWS_AS(pp_theta({1.0, -0.2}, {0.5, 0.5}, eps), InvalidLF);
  CHECK_THROWS_AS(pp_theta({1.0, 1e-14}, {0.5, 0.5}, eps), InvalidLF);

  testing::StateSampler s(42);
  for (int n = 0; n < 1000; ++n) {
    const InterfaceHeights l{s.uniform(1e-6, 2), s.uniform(1e-6, 2)}, k{s.uniform(-2, 2), s.uniform(-2, 2)};
    const double t = pp_theta(l, k, eps);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    CHECK(t * k.left_plus + (1 - t) * l.left_plus >= eps * (1 - 1e-9) - 1e-15);
    CHECK(t * k.right_minus + (1 - t) * l.right_minus >= eps * (1 - 1e-9) - 1e-15);
  }
}

TEST_CASE("flux and source blends") {
  const Vec5 a{1, 2, 3, 4, 5}, b{-1, 0, 1, 2, 3};
  CHECK(limit_flux(a, b, 1.0) == a);
  CHECK(limit_flux(a, b, 0.0) == b);
  CHECK(limit_flux(a, b, 0.5) == Vec5{0, 1, 2, 3, 4});
  CHECK(limit_source_mean(2.0, 1.0, 1.0) == 2.0);
  CHECK(limit_source_mean(2.0, 1.0, 0.0) == 1.0);
  for (double t : {0.0, 0.3, 0.77, 1.0}) CHECK(limit_source_mean(0.6, 0.6, t) == doctest::Approx(0.6));
}
