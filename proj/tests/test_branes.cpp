#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "syz/branes.hpp"
#include "syz/error.hpp"

using syz::Complex;
using syz::LiftedPath;
using syz::LiftedVertex;

namespace {

constexpr double kPi = std::numbers::pi;

syz::SurfaceSpec a2_surface() { return syz::SurfaceSpec({1.0, std::exp(1.0), std::exp(2.0)}); }

LiftedPath spiral() { return LiftedPath(1, {{0, 0}, {0.25, kPi / 2}, {0.5, kPi}, {0.75, 1.5 * kPi}, {1, 2 * kPi}}); }

// Reference path with k full turns at the middle circle.
LiftedPath with_loops(const LiftedPath& ref, int k) {
  const LiftedVertex a = ref.front(), b = ref.back();
  const LiftedVertex mid{0.5 * (a.s + b.s), 0.5 * (a.theta + b.theta)};
  std::vector<LiftedVertex> v{a, mid};
  if (k != 0) v.push_back({mid.s, mid.theta + 2 * kPi * k});
  v.push_back({b.s, b.theta + 2 * kPi * k});
  return LiftedPath(ref.target(), v);
}

// Random path between the reference endpoints, interior vertices inside the
// open strip but in any order of s.
LiftedPath wandering_path(gen::Rng& rng, const syz::SurfaceSpec& spec, int i) {
  const LiftedPath ref = syz::reference_path(spec, i);
  const double s0 = ref.front().s, s1 = ref.back().s;
  std::vector<LiftedVertex> v{ref.front()};
  const int interior = gen::uniform_int(rng, 0, 5);
  for (int k = 0; k < interior; ++k) v.push_back({gen::uniform(rng, s0, s1), gen::uniform(rng, -10, 10)});
  v.push_back({ref.back().s, ref.back().theta + 2 * kPi * gen::uniform_int(rng, -2, 2)});
  return LiftedPath(i, v);
}

}  // namespace

TEST_CASE("lifted path validation") {
  CHECK_THROWS_AS(LiftedPath(0, {{0, 0}, {1, 0}}), syz::InputError);
  CHECK_THROWS_AS(LiftedPath(1, {{0, 0}}), syz::InputError);
  CHECK_THROWS_AS(LiftedPath(1, {{0, 0}, {0, 0}}), syz::InputError);
  CHECK_THROWS_AS(LiftedPath(1, {{0, 0}, {NAN, 0}}), syz::InputError);
  const LiftedPath p(1, {{0, 0}, {1, 0}, {1, 2}});
  CHECK(p.length() == doctest::Approx(3.0));
  CHECK(p.at_length(2.0).theta == doctest::Approx(1.0));
  CHECK(p.lifted_at(0.25).s == doctest::Approx(0.5));
  CHECK(std::abs(p.point_at(1.0) - std::polar(std::exp(1.0), 2.0)) <= 1e-12);
}

TEST_CASE("admissibility examples") {
  const syz::SurfaceSpec spec({1.0, 2.0, 4.0});
  const double l2 = std::log(2.0);
  CHECK(syz::is_admissible(spec, LiftedPath(1, {{0, 0}, {l2, 0}})));
  CHECK(syz::is_admissible(spec, LiftedPath(2, {{l2, 2 * kPi}, {2 * l2, 2 * kPi}})));
  // Overshoots through a_2 = 4 before coming back to a_1 = 2.
  CHECK_FALSE(syz::is_admissible(spec, LiftedPath(1, {{0, 0}, {2 * l2 + 0.5, 0}, {l2, 0}})));
  // Through a lift of the start root in the interior.
  CHECK_FALSE(syz::is_admissible(spec, LiftedPath(1, {{0, 0}, {-0.5, kPi}, {0, 2 * kPi}, {l2, 0.0}})));
  CHECK_FALSE(syz::is_admissible(spec, LiftedPath(1, {{0, 0}, {l2, 1.0}})));
  CHECK_FALSE(syz::is_admissible(spec, LiftedPath(1, {{0.1, 0}, {l2, 0}})));
  CHECK_FALSE(syz::is_admissible(spec, LiftedPath(3, {{2 * l2, 0}, {3 * l2, 0}})));
  CHECK(syz::admissibility_violation(spec, LiftedPath(1, {{0, 0}, {l2, 1.0}}))->find("end") != std::string::npos);
}

TEST_CASE("strong admissibility examples") {
  const auto spec = a2_surface();
  CHECK(syz::is_strongly_admissible(spec, syz::reference_path(spec, 1)));
  CHECK(syz::is_strongly_admissible(spec, spiral()));
  CHECK_FALSE(syz::is_strongly_admissible(spec, LiftedPath(1, {{0, 0}, {0.8, 1}, {0.4, 2}, {1, 0}})));
  CHECK_THROWS_AS(syz::is_strongly_admissible(spec, LiftedPath(1, {{0, 0}, {1, 1}})), syz::DomainError);
}

TEST_CASE("strong admissibility agrees with circle counting") {
  gen::Rng rng(41);
  int strong = 0, weak = 0;
  for (int k = 0; k < 300; ++k) {
    const auto spec = gen::surface(rng, 3);
    const int i = gen::uniform_int(rng, 1, 3);
    const LiftedPath path = wandering_path(rng, spec, i);
    REQUIRE(syz::is_admissible(spec, path));
    // Levels between consecutive distinct vertex heights see every crossing pattern.
    std::vector<double> heights;
    for (const auto& v : path.vertices()) heights.push_back(v.s);
    std::sort(heights.begin(), heights.end());
    bool once = true;
    for (std::size_t m = 0; m + 1 < heights.size(); ++m) {
      if (heights[m] == heights[m + 1]) continue;
      once = once && oracle::circle_crossings(path, 0.5 * (heights[m] + heights[m + 1])) == 1;
    }
    const bool result = syz::is_strongly_admissible(spec, path);
    CHECK(result == once);
    (result ? strong : weak) += 1;
  }
  CHECK(strong > 20);
  CHECK(weak > 20);
}

TEST_CASE("reference path convention") {
  const auto r12 = syz::reference_path(syz::SurfaceSpec({1.0, 2.0}), 1);
  CHECK(r12.segment_count() == 1);
  CHECK(r12.back().s == doctest::Approx(std::log(2.0)));
  CHECK(r12.back().theta == 0.0);
  const auto tie = syz::reference_path(syz::SurfaceSpec({1.0, -2.0}), 1);
  CHECK(tie.front().s == 0.0);
  CHECK(tie.front().theta == 0.0);
  CHECK(tie.back().theta == doctest::Approx(kPi));
  // Minimal rotation across the branch cut of arg.
  const auto cut = syz::reference_path(syz::SurfaceSpec({std::polar(1.0, 3.0), std::polar(2.0, -3.0)}), 1);
  CHECK(cut.back().theta - cut.front().theta == doctest::Approx(2 * kPi - 6.0));
  CHECK_THROWS_AS(syz::reference_path(a2_surface(), 3), syz::InputError);
  CHECK(!syz::reference_path_convention().empty());
}

TEST_CASE("winding number examples") {
  const auto spec = a2_surface();
  const auto ref = syz::reference_path(spec, 1);
  CHECK(syz::winding_number(ref, ref) == 0);
  CHECK(syz::winding_number(spiral(), ref) == 1);
  for (int k = -3; k <= 3; ++k) {
    const auto looped = with_loops(ref, k);
    CHECK(syz::is_admissible(spec, looped));
    CHECK(syz::winding_number(looped, ref) == k);
    CHECK(oracle::ray_crossing_winding(looped, ref) == k);
  }
  // Starting on another lift of a_0 does not change the class.
  CHECK(syz::winding_number(LiftedPath(1, {{0, 4 * kPi}, {1, 6 * kPi}}), ref) == 1);
  CHECK_THROWS_AS(syz::winding_number(LiftedPath(1, {{0, 0}, {1.5, 0}}), ref), syz::DomainError);
  CHECK_THROWS_AS(syz::winding_number(LiftedPath(1, {{0, 0}, {1, 0.5}}), ref), syz::DomainError);
}

TEST_CASE("winding number matches the ray-crossing oracle") {
  gen::Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    const auto spec = gen::surface(rng, gen::uniform_int(rng, 1, 4));
    const int i = gen::uniform_int(rng, 1, spec.n());
    const int w = gen::uniform_int(rng, -3, 3);
    const auto path = gen::strongly_admissible_path(rng, spec, i, w);
    const auto ref = syz::reference_path(spec, i);
    REQUIRE(syz::is_strongly_admissible(spec, path));
    const int computed = syz::winding_number(path, ref);
    CHECK(computed == w);
    CHECK(computed == oracle::ray_crossing_winding(path, ref));
  }
}

TEST_CASE("winding number is invariant under refinement and homotopy") {
  gen::Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const auto spec = gen::surface(rng, 3);
    const int i = gen::uniform_int(rng, 1, 3);
    LiftedPath path = wandering_path(rng, spec, i);
    const auto ref = syz::reference_path(spec, i);
    const int w = syz::winding_number(path, ref);
    const double s0 = ref.front().s, s1 = ref.back().s;
    for (int move = 0; move < 10; ++move) {
      std::vector<LiftedVertex> v(path.vertices().begin(), path.vertices().end());
      const auto seg = static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(v.size()) - 2));
      if (gen::uniform_int(rng, 0, 1) == 0) {
        // Refinement: a new vertex on an existing segment.
        const double t = gen::uniform(rng, 0.1, 0.9);
        v.insert(v.begin() + static_cast<long>(seg) + 1,
                 {v[seg].s + t * (v[seg + 1].s - v[seg].s), v[seg].theta + t * (v[seg + 1].theta - v[seg].theta)});
      } else if (v.size() > 2) {
        // Homotopy: move an interior vertex inside the open strip, which
        // contains no lift of any root.
        const std::size_t m = 1 + seg % (v.size() - 2);
        v[m] = {gen::uniform(rng, s0, s1), v[m].theta + gen::uniform(rng, -8, 8)};
      }
      path = LiftedPath(i, v);
      REQUIRE(syz::is_admissible(spec, path));
      CHECK(syz::winding_number(path, ref) == w);
    }
    CHECK(oracle::ray_crossing_winding(path, ref) == w);
  }
}

TEST_CASE("intersection counts") {
  CHECK(syz::intersection_count(2, 2, 5) == 2);
  CHECK(syz::intersection_count(2, 3, 5) == 1);
  CHECK(syz::intersection_count(1, 4, 5) == 0);
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(syz::intersection_count(i, j, n) == syz::intersection_count(j, i, n));
    }
  }
  CHECK_THROWS_AS(syz::intersection_count(0, 1, 3), syz::InputError);
  CHECK_THROWS_AS(syz::intersection_count(1, 4, 3), syz::InputError);
}

TEST_CASE("sphere branes") {
  const auto spec = a2_surface();
  const auto brane = syz::make_sphere_brane(spec, spiral());
  CHECK(brane.holonomy == Complex{1.0, 0.0});
  CHECK_THROWS_AS(syz::make_sphere_brane(spec, LiftedPath(1, {{0, 0}, {1, 1}})), syz::DomainError);
  CHECK_THROWS_AS(syz::make_sphere_brane(spec, spiral(), 2.0), syz::DomainError);

  const auto surface = syz::sphere_brane_surface(spec, spiral(), 8, 8);
  for (double t : surface.t_samples) {
    for (double a : surface.alpha_samples) {
      const auto p = surface.map(t, a);
      CHECK(syz::on_surface(spec, p));
      CHECK(std::abs(std::abs(p.u) - std::abs(p.v)) <= 1e-12 * (1 + std::abs(p.u)));
    }
  }
  CHECK_THROWS_AS(syz::sphere_brane_surface(spec, spiral(), 8, 8, 100.0), syz::InputError);
  CHECK_THROWS_AS(syz::sphere_brane_surface(spec, spiral(), 0, 8), syz::InputError);
}

TEST_CASE("sphere branes are Lagrangian") {
  gen::Rng rng(44);
  for (int k = 0; k < 20; ++k) {
    const auto spec = gen::surface(rng, 3);
    const int i = gen::uniform_int(rng, 1, 3);
    const auto path = gen::strongly_admissible_path(rng, spec, i, gen::uniform_int(rng, -2, 2), 3);
    CHECK(syz::lagrangian_defect(syz::sphere_brane_surface(spec, path, 6, 6)) <= 1e-6);
  }
}

TEST_CASE("symmetry and flatness defects") {
  const syz::RegularGrid grid{{-1.0, -1.0}, {0.25, 0.25}, {9, 9}};
  const syz::VectorField potential = [](std::span<const double> x) {
    return std::vector<double>{2 * x[0] + x[1], x[0]};
  };
  const syz::VectorField shear = [](std::span<const double> x) { return std::vector<double>{x[1], 0.0}; };
  const syz::VectorField constant = [](std::span<const double>) { return std::vector<double>{0.3, -2.0}; };
  CHECK(syz::lagrangian_symmetry_defect(potential, grid) <= 1e-6);
  CHECK(syz::lagrangian_symmetry_defect(shear, grid) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(syz::flatness_defect(shear, grid) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(syz::flatness_defect(potential, grid) <= 1e-6);
  CHECK(syz::flatness_defect(constant, grid) == 0.0);

  const syz::RegularGrid line{{0.0}, {0.1}, {11}};
  const syz::VectorField one_d = [](std::span<const double> x) { return std::vector<double>{std::sin(x[0])}; };
  CHECK(syz::lagrangian_symmetry_defect(one_d, line) == 0.0);

  // Nonlinear potential phi = sin(x1) x2^2 + x1^3 x3.
  const syz::RegularGrid cube{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}, {3, 3, 3}};
  const syz::VectorField grad = [](std::span<const double> x) {
    return std::vector<double>{std::cos(x[0]) * x[1] * x[1] + 3 * x[0] * x[0] * x[2], 2 * std::sin(x[0]) * x[1],
                               x[0] * x[0] * x[0]};
  };
  CHECK(syz::lagrangian_symmetry_defect(grad, cube) <= 1e-6);

  CHECK_THROWS_AS(syz::lagrangian_symmetry_defect(shear, syz::RegularGrid{{0.0}, {0.1}, {0}}), syz::InputError);
  CHECK_THROWS_AS(syz::lagrangian_symmetry_defect(shear, syz::RegularGrid{}), syz::InputError);
  CHECK_THROWS_AS(syz::lagrangian_symmetry_defect(shear, grid, 0.0), syz::InputError);
}

TEST_CASE("conormal branes") {
  const auto psi = syz::constant_field_potential({0.0, 0.0});
  const syz::Potential phi{[](std::span<const double> x) { return std::vector<double>{2 * x[0] + x[1], x[0]}; },
                           [](std::span<const double>) {
                             return std::vector<std::vector<double>>{{2, 1}, {1, 0}};
                           }};
  const auto brane = syz::make_conormal_brane(3, 2, {0.5}, {0.25}, phi, psi);
  const double x[2] = {1.0, 2.0};
  CHECK(brane.xi(x) == std::vector<double>{4.0, 1.0});
  CHECK(brane.a(x) == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(syz::make_conormal_brane(3, 2, {0.5, 1.0}, {0.25}, phi, psi), syz::InputError);
  CHECK_THROWS_AS(syz::make_conormal_brane(2, 3, {}, {}, phi, psi), syz::InputError);
}
