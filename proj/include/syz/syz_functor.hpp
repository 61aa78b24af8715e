#pragma once

// The SYZ transform on objects. Torus fibers with flat connections go to
// skyscraper sheaves, the Lagrangian spheres L_gamma to line bundles
// O_{E_i}(-w(gamma)) on exceptional curves, and conormal branes to cycles
// {z_j = A_j} carrying the dual connection.
//
// Mirror points use the toric chart i of the strip containing s, with
// u_i = exp(-2 pi s) conj(h1) and h = u_i v_{i+1} = 1 + w. So E_i = {v_{i+1} = 0}
// is the slice w = -1 and the removed divisor D = {h = 1} is w = 0, which a
// global w = e^{-lambda} hol never reaches.

#include <optional>
#include <variant>
#include <vector>

#include "syz/branes.hpp"
#include "syz/geometry_core.hpp"
#include "syz/toric_mirror.hpp"

namespace syz {

struct Skyscraper {
  MirrorPoint<Complex> point;
  Complex w;
  std::vector<int> exceptional;  ///< exceptional curves through the point
};

/// (E_i, O_{E_i}(degree)).
struct ExceptionalBundle {
  int i = 0;
  long long degree = 0;
};

/// C = {z_j = A_j, j = k+1..n} with the dual connection
/// d + 2 pi i (sum a_j dx_j + sum xi_j dy_j), kept as the brane it came from.
struct CycleBrane {
  int n = 0;
  int k = 0;
  std::vector<Complex> A;
  ConormalBrane source;
};

using BBrane = std::variant<Skyscraper, ExceptionalBundle, CycleBrane>;

ExceptionalBundle make_exceptional_bundle(int i, long long degree, int n);

/// Index of the toric chart used for a fiber over s: the number of s_j below s,
/// capped at n.
int fiber_chart(const SurfaceSpec& spec, double s);

/// Throws DomainError for (s, lambda) in Gamma, for lambda = 0 outside
/// (s_0, s_n), and for non-unit holonomies.
Skyscraper transform_fiber(const SurfaceSpec& spec, double s, double lambda, Complex h1, Complex h2);

/// Throws DomainError unless the path is strongly admissible.
ExceptionalBundle transform_sphere_brane(const SurfaceSpec& spec, const LiftedPath& path);

/// A_j = exp 2 pi (c_j - i b_j).
CycleBrane transform_conormal(const ConormalBrane& brane);

/// max over the grid of |F^{(0,2)}| coefficients,
///   (pi/2) |-i (d a_j/d x_l - d a_l/d x_j) + (d xi_j/d x_l - d xi_l/d x_j)|.
double curvature_02_defect(const ConormalBrane& brane, const RegularGrid& grid, double step = kDefaultStep);
double curvature_02_defect(const VectorField& xi, const VectorField& a, const RegularGrid& grid,
                           double step = kDefaultStep);

/// round(-(xi_1(x_end) - xi_1(x_start))) for a k = 1 brane. Throws
/// DomainError if the unrounded value is more than residual_tol from an integer.
long long chern_degree(const ConormalBrane& brane, double x_start, double x_end, double residual_tol = 1e-6);

/// The k = 1 conormal brane over {x_2 = 0} in the strip (s_{i-1}, s_i) whose
/// fiber coordinate is the angle of a strongly admissible path relative to the
/// reference path, xi_1(s) = (theta(s) - theta_ref(s)) / 2 pi, with b_2 = 1/2
/// so that its cycle is w = -1, the curve E_i.
ConormalBrane angular_conormal_brane(const SurfaceSpec& spec, const LiftedPath& path);

}  // namespace syz
