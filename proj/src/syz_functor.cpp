#include "syz/syz_functor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syz/affine_base.hpp"
#include "syz/error.hpp"
#include "syz/kernels.hpp"

namespace syz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

ExceptionalBundle make_exceptional_bundle(int i, long long degree, int n) {
  if (i < 1 || i > n) throw InputError("exceptional curve index must lie in 1..n");
  return {i, degree};
}

int fiber_chart(const SurfaceSpec& spec, double s) {
  const auto values = spec.singular_values();
  const auto below = std::count_if(values.begin(), values.end(), [s](double sj) { return sj < s; });
  return std::min(static_cast<int>(below), spec.n());
}

Skyscraper transform_fiber(const SurfaceSpec& spec, double s, double lambda, Complex h1, Complex h2) {
  if (!std::isfinite(s) || !std::isfinite(lambda)) throw InputError("base point is not finite");
  if (std::abs(std::abs(h1) - 1.0) > spec.tol()) throw DomainError("holonomy h1 must be a unit complex number");
  if (classify_fiber(spec, {s, lambda}) == FiberType::Nodal) throw DomainError("base point lies in the nodal set");
  if (lambda == 0.0) {
    const auto values = spec.singular_values();
    for (double sj : values) {
      if (near(s, sj, spec.tol())) throw DomainError("base point lies in the nodal set");
    }
    if (!(values.front() < s && s < values.back())) {
      throw DomainError("wall fibers are transformed only between consecutive singular values");
    }
  }
  const Complex w = global_w(lambda, h2, spec.tol());
  const int chart = fiber_chart(spec, s);
  const Complex u = std::exp(-kTwoPi * s) * std::conj(h1);
  // w = -1 exactly (lambda = 0, h2 = -1) gives h = 0: the point lies on E_i.
  MirrorPoint<Complex> p{chart, u, (1.0 + w) / u};
  return {p, w, exceptional_components(p, spec.n())};
}

ExceptionalBundle transform_sphere_brane(const SurfaceSpec& spec, const LiftedPath& path) {
  if (!is_strongly_admissible(spec, path)) throw DomainError("path is not strongly admissible");
  const int w = winding_number(path, reference_path(spec, path.target()));
  return make_exceptional_bundle(path.target(), -w, spec.n());
}

CycleBrane transform_conormal(const ConormalBrane& brane) {
  CycleBrane cycle{brane.n, brane.k, {}, brane};
  for (std::size_t j = 0; j < brane.c.size(); ++j) {
    cycle.A.push_back(std::exp(kTwoPi * Complex{brane.c[j], -brane.b[j]}));
  }
  return cycle;
}

double curvature_02_defect(const VectorField& xi, const VectorField& a, const RegularGrid& grid, double step) {
  const JacobianPairs dxi = jacobian_pairs(xi, grid, step);
  const JacobianPairs da = jacobian_pairs(a, grid, step);
  std::vector<double> curl_xi(dxi.upper.size());
  std::vector<double> curl_a(da.upper.size());
  for (std::size_t m = 0; m < curl_xi.size(); ++m) curl_xi[m] = dxi.upper[m] - dxi.lower[m];
  for (std::size_t m = 0; m < curl_a.size(); ++m) curl_a[m] = da.upper[m] - da.lower[m];
  return 0.5 * std::numbers::pi * kernels::active().max_hypot(curl_a, curl_xi);
}

double curvature_02_defect(const ConormalBrane& brane, const RegularGrid& grid, double step) {
  if (grid.dim() != brane.k) throw InputError("grid dimension must equal the brane dimension k");
  if (brane.k == 0) return 0.0;
  return curvature_02_defect(brane.phi.gradient, brane.psi.gradient, grid, step);
}

long long chern_degree(const ConormalBrane& brane, double x_start, double x_end, double residual_tol) {
  if (brane.k != 1) throw InputError("chern_degree needs a brane with k = 1");
  const double start[1] = {x_start};
  const double end[1] = {x_end};
  const double value = -(brane.xi(end).at(0) - brane.xi(start).at(0));
  const double rounded = std::round(value);
  if (!(std::abs(value - rounded) <= residual_tol)) {
    throw DomainError("xi_1 increment is not integral: the brane does not compactify");
  }
  return static_cast<long long>(rounded);
}

namespace {

// theta(s) along a polyline with strictly increasing s; the end segments are
// extended linearly so finite differences may step slightly outside.
struct AngleProfile {
  std::vector<LiftedVertex> vertices;

  std::size_t segment(double s) const {
    std::size_t k = 0;
    while (k + 2 < vertices.size() && s > vertices[k + 1].s) ++k;
    return k;
  }
  double slope(std::size_t k) const {
    const auto& p = vertices[k];
    const auto& q = vertices[k + 1];
    return (q.theta - p.theta) / (q.s - p.s);
  }
  double theta(double s) const {
    const std::size_t k = segment(s);
    return vertices[k].theta + slope(k) * (s - vertices[k].s);
  }
};

}  // namespace

ConormalBrane angular_conormal_brane(const SurfaceSpec& spec, const LiftedPath& path) {
  if (!is_strongly_admissible(spec, path)) throw DomainError("path is not strongly admissible");
  const LiftedPath reference = reference_path(spec, path.target());
  const double shift = std::round((reference.front().theta - path.front().theta) / kTwoPi) * kTwoPi;
  AngleProfile own{{path.vertices().begin(), path.vertices().end()}};
  for (auto& v : own.vertices) v.theta += shift;
  AngleProfile ref{{reference.vertices().begin(), reference.vertices().end()}};

  Potential phi{[own, ref](std::span<const double> x) {
                  return std::vector<double>{(own.theta(x[0]) - ref.theta(x[0])) / kTwoPi};
                },
                [own, ref](std::span<const double> x) {
                  const double d = (own.slope(own.segment(x[0])) - ref.slope(0)) / kTwoPi;
                  return std::vector<std::vector<double>>{{d}};
                }};
  return make_conormal_brane(2, 1, {0.0}, {0.5}, std::move(phi), constant_field_potential({0.0}));
}

}  // namespace syz
