#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "syz/error.hpp"
#include "syz/geometry_core.hpp"

using syz::Complex;

namespace {

syz::SurfaceSpec roots_12() { return syz::SurfaceSpec({1.0, 2.0}); }

// Surface {u = e^{t + i alpha}, v = f(z)/u, z = z0 e^t}: on Y but not Lagrangian.
syz::ParamSurface control_surface(const syz::SurfaceSpec& spec, Complex z0) {
  syz::ParamSurface s{spec,
                      [spec, z0](double t, double alpha) {
                        const Complex u = std::exp(Complex{t, alpha});
                        const Complex z = z0 * std::exp(t);
                        return syz::PointY{u, spec.f(z) / u, z};
                      },
                      {},
                      {}};
  for (int k = 0; k < 8; ++k) {
    s.t_samples.push_back(-0.2 + 0.05 * k);
    s.alpha_samples.push_back(0.7 * k);
  }
  return s;
}

}  // namespace

TEST_CASE("surface spec validation") {
  CHECK_THROWS_AS(syz::SurfaceSpec({1.0}), syz::InputError);
  CHECK_THROWS_AS(syz::SurfaceSpec({0.0, 2.0}), syz::InputError);
  CHECK_THROWS_AS(syz::SurfaceSpec({2.0, 1.0}), syz::InputError);
  CHECK_THROWS_AS(syz::SurfaceSpec({1.0, -1.0}), syz::InputError);
  CHECK_THROWS_AS(syz::SurfaceSpec({1.0, Complex{NAN, 0.0}}), syz::InputError);
  CHECK_THROWS_AS(syz::SurfaceSpec({1.0, 2.0}, -1.0), syz::InputError);
  const syz::SurfaceSpec spec({1.0, Complex{0.0, 2.0}, 3.0});
  CHECK(spec.n() == 2);
  CHECK(spec.singular_value(1) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("f is the product over roots") {
  const auto spec = roots_12();
  CHECK(spec.f(3.0) == Complex{2.0, 0.0});
  CHECK(spec.df(3.0) == Complex{3.0, 0.0});
  gen::Rng rng(11);
  const auto s = gen::surface(rng, 4);
  for (int k = 0; k < 50; ++k) {
    const Complex z{gen::uniform(rng, -3, 3), gen::uniform(rng, -3, 3)};
    Complex expected = 1.0;
    for (Complex a : s.roots()) expected *= z - a;
    CHECK(std::abs(s.f(z) - expected) <= 1e-12 * (1 + std::abs(expected)));
  }
}

TEST_CASE("moment map examples") {
  const syz::SurfaceSpec spec({1.0, 2.0});
  CHECK(syz::moment_map(syz::make_point(spec, 2.0, 0.0, 1.0)) == 2.0);
  CHECK(syz::moment_map(syz::make_point(spec, 0.0, 3.0, 2.0)) == -4.5);
  const Complex z{0.3, 1.7};
  const Complex fz = spec.f(z);
  const Complex u = std::polar(std::sqrt(std::abs(fz)), 0.4);
  CHECK(std::abs(syz::moment_map(syz::make_point(spec, u, fz / u, z))) <= 1e-14);
  CHECK_THROWS_AS(syz::make_point(spec, 1.0, 1.0, 1.0), syz::InputError);
  CHECK_THROWS_AS(syz::make_point(spec, 1.0, 2.0, 0.0), syz::InputError);
}

TEST_CASE("fibration examples and circle-action invariance") {
  const syz::SurfaceSpec spec({1.0, Complex{0.0, 2.0}});
  const auto b = syz::fibration(syz::make_point(spec, 2.0, 0.0, Complex{0.0, 2.0}));
  CHECK(b.s == doctest::Approx(std::log(2.0)));
  CHECK(b.lambda == 2.0);

  gen::Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const auto s = gen::surface(rng, 3);
    const Complex z = std::polar(std::exp(gen::uniform(rng, -1, 3)), gen::uniform(rng, -3, 3));
    const Complex u = std::polar(std::exp(gen::uniform(rng, -2, 2)), gen::uniform(rng, -3, 3));
    const syz::PointY p{u, s.f(z) / u, z};
    const auto q = syz::circle_action(p, gen::uniform(rng, -10, 10));
    const auto bp = syz::fibration(p);
    const auto bq = syz::fibration(q);
    CHECK(bp.s == doctest::Approx(std::log(std::abs(z))).epsilon(1e-14));
    CHECK(bp.lambda == doctest::Approx(0.5 * (std::norm(u) - std::norm(p.v))).epsilon(1e-14));
    CHECK(bq.s == bp.s);
    CHECK(std::abs(bq.lambda - bp.lambda) <= 1e-12 * (1 + std::abs(bp.lambda)));
  }
}

TEST_CASE("fiber classification and walls") {
  const auto spec = roots_12();
  CHECK(syz::classify_fiber(spec, {0.0, 0.0}) == syz::FiberType::Nodal);
  CHECK(syz::classify_fiber(spec, {0.0, 0.5}) == syz::FiberType::Smooth);
  CHECK(syz::classify_fiber(spec, {std::log(1.5), 0.0}) == syz::FiberType::Smooth);
  CHECK(syz::on_wall(spec, {0.0, 7.3}));
  CHECK_FALSE(syz::on_wall(spec, {1.0, 7.3}));
  CHECK(syz::on_wall(spec, {std::log(2.0), -4.0}));

  // Nodal outputs over a grid containing the singular points are exactly Gamma.
  const syz::SurfaceSpec s3({1.0, std::exp(1.0), std::exp(2.0)});
  int nodal = 0;
  for (int a = -10; a <= 30; ++a) {
    for (int l = -5; l <= 5; ++l) {
      const syz::BasePoint b{0.1 * a, 0.1 * l};
      const bool is_nodal = syz::classify_fiber(s3, b) == syz::FiberType::Nodal;
      const bool expected = l == 0 && (a == 0 || a == 10 || a == 20);
      CHECK(is_nodal == expected);
      if (is_nodal) CHECK(syz::on_wall(s3, b));
      nodal += is_nodal;
    }
  }
  CHECK(nodal == 3);
}

TEST_CASE("disk area") {
  CHECK(syz::disk_area(0.0) == 0.0);
  CHECK(syz::disk_area(3.5) == 3.5);
  CHECK(syz::disk_area(-2.0) == 2.0);
}

TEST_CASE("reduced form density") {
  const auto spec = roots_12();
  CHECK(syz::reduced_form_density(spec, 0.0, 3.0) == doctest::Approx(0.5 * (9.0 / 4.0 + 1.0 / 9.0)));
  CHECK(syz::reduced_form_density(spec, 1e15, 3.0) == doctest::Approx(0.5 / 9.0));
  CHECK(syz::reduced_form_density(spec, 0.0, 1.5) == doctest::Approx(0.5 / 2.25));
  CHECK_THROWS_AS(syz::reduced_form_density(spec, 0.0, 0.0), syz::DomainError);
  gen::Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const Complex z{gen::uniform(rng, -4, 4), gen::uniform(rng, -4, 4)};
    CHECK(syz::reduced_form_density(spec, gen::uniform(rng, -5, 5), z) > 0.0);
  }
  // Node itself: lambda = 0 at a root.
  CHECK(syz::reduced_form_density(spec, 0.0, 1.0) > 0.0);
}

TEST_CASE("fiber points lie on Y over the requested base point") {
  gen::Rng rng(14);
  for (int k = 0; k < 300; ++k) {
    const auto spec = gen::surface(rng, 3);
    const syz::BasePoint b{gen::uniform(rng, -1, 4), gen::uniform(rng, -30, 30)};
    const auto p = syz::fiber_point(spec, b, gen::uniform(rng, -3, 3), gen::uniform(rng, -3, 3));
    CHECK(syz::on_surface(spec, p));
    const auto image = syz::fibration(p);
    CHECK(image.s == doctest::Approx(b.s).epsilon(1e-12));
    // |u|^2 - |v|^2 cancels; the error is relative to |u|^2 + |v|^2.
    CHECK(std::abs(image.lambda - b.lambda) <= 1e-13 * (std::norm(p.u) + std::norm(p.v)));
  }
}

TEST_CASE("torus fibers are Lagrangian, the control surface is not") {
  gen::Rng rng(15);
  for (int k = 0; k < 10; ++k) {
    const auto spec = gen::surface(rng, 2);
    const syz::BasePoint b{gen::uniform(rng, -1, 3), gen::uniform(rng, -2, 2)};
    CHECK(syz::lagrangian_defect(syz::torus_fiber_surface(spec, b, 12)) <= 1e-6);
  }
  const auto spec = roots_12();
  const auto control = control_surface(spec, Complex{0.5, 1.2});
  const double defect = syz::lagrangian_defect(control);
  CHECK(defect > 1e-2);

  // Same quantity from the real-coordinate form of omega.
  double expected = 0.0;
  const double h = syz::kDefaultStep;
  for (double t : control.t_samples) {
    for (double a : control.alpha_samples) {
      const auto c = control.map(t, a);
      auto diff = [h](const syz::PointY& p, const syz::PointY& q) {
        return syz::PointY{(p.u - q.u) / (2 * h), (p.v - q.v) / (2 * h), (p.z - q.z) / (2 * h)};
      };
      const auto xt = diff(control.map(t + h, a), control.map(t - h, a));
      const auto xa = diff(control.map(t, a + h), control.map(t, a - h));
      expected = std::max(expected, std::abs(oracle::omega(c, xt, xa)));
    }
  }
  CHECK(defect == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("fiber defect converges at least quadratically in the step") {
  gen::Rng rng(16);
  for (int k = 0; k < 5; ++k) {
    const auto spec = gen::surface(rng, 2);
    const syz::BasePoint b{gen::uniform(rng, -0.5, 2.0), gen::uniform(rng, 0.3, 1.5)};
    const auto fiber = syz::torus_fiber_surface(spec, b, 10);
    const double coarse = syz::lagrangian_defect(fiber, 4e-2);
    const double fine = syz::lagrangian_defect(fiber, 2e-2);
    CHECK(fine * 4.0 <= coarse);
    CHECK(syz::lagrangian_defect(fiber) <= 1e-6);
  }
}

TEST_CASE("fiber defect relative to |f| far from the nodes") {
  // Round-off in the tangents is about eps |f| / step, so the absolute
  // defect grows with |f| while the relative one stays small.
  gen::Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    const auto spec = gen::surface(rng, 3);
    const syz::BasePoint b{gen::uniform(rng, spec.singular_value(3), spec.singular_value(3) + 2.0),
                           gen::uniform(rng, -2, 2)};
    const auto fiber = syz::torus_fiber_surface(spec, b, 8);
    double f_max = 1.0;
    for (double t : fiber.t_samples) f_max = std::max(f_max, std::abs(spec.f(std::polar(std::exp(b.s), t))));
    CHECK(syz::lagrangian_defect(fiber) <= 1e-9 * f_max);
  }
}

TEST_CASE("degenerate grids are rejected") {
  const auto spec = roots_12();
  auto surface = syz::torus_fiber_surface(spec, {0.3, 0.1}, 4);
  surface.t_samples.clear();
  CHECK_THROWS_AS(syz::lagrangian_defect(surface), syz::InputError);
  CHECK_THROWS_AS(syz::lagrangian_defect(syz::torus_fiber_surface(spec, {0.3, 0.1}, 4), 0.0), syz::InputError);
  CHECK_THROWS_AS(syz::torus_fiber_surface(spec, {0.3, 0.1}, 0), syz::InputError);
}
