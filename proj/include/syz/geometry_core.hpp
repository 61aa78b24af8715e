#pragma once

// The surface Y = {uv = f(z)} in C^2 x C^*, its Kahler form
//   omega = -(i/2)(du^dbar u + dv^dbar v + dz^dbar z / |z|^2),
// the circle-action moment map and the torus fibration
//   rho(u, v, z) = (log|z|, (|u|^2 - |v|^2) / 2)
// onto the base B = R^2.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace syz {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
/// Central-difference step for numeric tangent vectors.
inline constexpr double kDefaultStep = 1e-4;

/// The polynomial f(z) = prod_i (z - a_i) of degree n + 1, kept as its roots.
/// Roots are nonzero with strictly increasing moduli, so s_i = log|a_i| is
/// strictly increasing and every singular fiber has exactly one node.
class SurfaceSpec {
 public:
  explicit SurfaceSpec(std::vector<Complex> roots, double tol = kDefaultTol);

  int n() const { return static_cast<int>(roots_.size()) - 1; }
  double tol() const { return tol_; }
  std::span<const Complex> roots() const { return roots_; }
  const Complex& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

  /// s_i = log|a_i|, i = 0..n.
  std::span<const double> singular_values() const { return singular_values_; }
  double singular_value(int i) const { return singular_values_.at(static_cast<std::size_t>(i)); }

  Complex f(Complex z) const;
  Complex df(Complex z) const;

 private:
  std::vector<Complex> roots_;
  std::vector<double> singular_values_;
  double tol_;
};

struct PointY {
  Complex u;
  Complex v;
  Complex z;
};

/// |uv - f(z)| <= tol (1 + |f(z)|) and z != 0.
bool on_surface(const SurfaceSpec& spec, const PointY& p);

/// Validating constructor; throws InputError off the surface.
PointY make_point(const SurfaceSpec& spec, Complex u, Complex v, Complex z);

struct BasePoint {
  double s = 0.0;
  double lambda = 0.0;
};

enum class FiberType { Nodal, Smooth };

double moment_map(const PointY& p);
BasePoint fibration(const PointY& p);

/// (u, v, z) -> (e^{i theta} u, e^{-i theta} v, z).
PointY circle_action(const PointY& p, double theta);

FiberType classify_fiber(const SurfaceSpec& spec, BasePoint b);

/// True on the wall H = {s = s_i}: fibers there bound holomorphic disks.
bool on_wall(const SurfaceSpec& spec, BasePoint b);

/// Symplectic area |lambda| of the disk bounded by a fiber over the wall.
double disk_area(double lambda);

/// The reduced form on Y_lambda is omega_lambda = density * (-i dz^dbar z) with
/// density = (|f'|^2 / (2 sqrt(lambda^2 + |f|^2)) + 1/|z|^2) / 2 > 0.
double reduced_form_density(const SurfaceSpec& spec, double lambda, Complex z);

/// Point of the fiber T_{s,lambda} with arg z = arg_z and arg u = alpha.
PointY fiber_point(const SurfaceSpec& spec, BasePoint b, double arg_z, double alpha);

/// A two-parameter family (t, alpha) -> Y sampled on the rectangular grid
/// t_samples x alpha_samples. The map must be evaluable slightly off the grid
/// (by the finite-difference step).
struct ParamSurface {
  SurfaceSpec spec;
  std::function<PointY(double t, double alpha)> map;
  std::vector<double> t_samples;
  std::vector<double> alpha_samples;
};

/// The torus fiber T_{s,lambda} parameterized by (arg z, arg u) on a
/// samples x samples grid.
ParamSurface torus_fiber_surface(const SurfaceSpec& spec, BasePoint b, int samples);

/// max over the grid of |omega(d_t X, d_alpha X)|, tangents by the
/// fourth-order central difference stencil with the given step. Zero up to
/// O(step^4) truncation (plus round-off ~ eps |f| / step) exactly for
/// Lagrangian surfaces.
double lagrangian_defect(const ParamSurface& surface, double step = kDefaultStep);

}  // namespace syz
