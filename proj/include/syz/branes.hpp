#pragma once

// A-branes: paths between roots of f lifted to the universal cover of C^*,
// their admissibility and winding numbers, the Lagrangian spheres L_gamma,
// and conormal branes with flat connections over affine subspaces of the
// base.
//
// A path is stored as a polyline in (s, theta) = (log|z|, continuous arg z).
// Winding numbers are then differences of endpoint angles, not quadratures.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syz/geometry_core.hpp"

namespace syz {

struct LiftedVertex {
  double s = 0.0;
  double theta = 0.0;
};

/// Piecewise-linear path z(t) = exp(s(t) + i theta(t)) from a_{i-1} to a_i.
/// The parameter t runs over [0, 1], each segment taking an equal share.
class LiftedPath {
 public:
  /// target is i (the path goes from a_{i-1} to a_i). Requires at least two
  /// finite vertices with distinct consecutive entries and target >= 1.
  LiftedPath(int target, std::vector<LiftedVertex> vertices);

  int target() const { return target_; }
  std::span<const LiftedVertex> vertices() const { return vertices_; }
  const LiftedVertex& front() const { return vertices_.front(); }
  const LiftedVertex& back() const { return vertices_.back(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }

  LiftedVertex lifted_at(double t) const;
  Complex point_at(double t) const;

  /// Euclidean length in the (s, theta) plane and the point at arclength
  /// sigma from the start (the end segments are extended beyond [0, length]).
  double length() const;
  LiftedVertex at_length(double sigma) const;

 private:
  int target_;
  std::vector<LiftedVertex> vertices_;
};

/// First violated admissibility criterion, or nullopt for an admissible path:
/// target in 1..n, starts at a lift of a_{i-1}, ends at a lift of a_i, and
/// meets no lift of any root in between.
std::optional<std::string> admissibility_violation(const SurfaceSpec& spec, const LiftedPath& path);
bool is_admissible(const SurfaceSpec& spec, const LiftedPath& path);

/// Strong admissibility: the path meets every circle |z| = e^s,
/// s_{i-1} <= s <= s_i, exactly once. For a polyline this is strict
/// monotonicity of s. Throws DomainError for an inadmissible path.
bool is_strongly_admissible(const SurfaceSpec& spec, const LiftedPath& path);

/// Straight segment from (s_{i-1}, arg a_{i-1}) to (s_i, theta_1) where
/// theta_1 is the lift of arg a_i closest to arg a_{i-1}; a half-turn tie is
/// resolved counter-clockwise (+pi).
LiftedPath reference_path(const SurfaceSpec& spec, int i);

/// One-line statement of the reference-path convention (printed by the CLI).
std::string reference_path_convention();

/// (theta_path(1) - theta_ref(1)) / 2 pi after shifting the path to start on
/// the same lift as the reference. Throws DomainError if the endpoints differ
/// as points of C^* or the quotient is not within residual_tol of an integer.
int winding_number(const LiftedPath& path, const LiftedPath& reference, double residual_tol = 1e-9);

/// |L_i cap L_j| for the A_n chain of Lagrangian spheres.
int intersection_count(int i, int j, int n);

/// The Lagrangian sphere L_gamma = {(u, v, gamma(t)) : |u| = |v|} with a flat
/// connection, kept as its gauge class (holonomy datum).
struct SphereBrane {
  LiftedPath path;
  Complex holonomy{1.0, 0.0};
};

SphereBrane make_sphere_brane(const SurfaceSpec& spec, LiftedPath path, Complex holonomy = {1.0, 0.0});

/// L_gamma parameterized by (sigma, arg u), sigma the (s, theta) arclength of
/// the path, with u = sqrt|f| e^{i arg u} and v = f / u. Each segment gets
/// t_per_segment equally spaced samples; samples closer than margin (in the
/// (s, theta) plane) to a kink or to a lift of a root are dropped, since
/// |u| = sqrt|f| is not smooth there. Throws InputError if none remain.
ParamSurface sphere_brane_surface(const SurfaceSpec& spec, const LiftedPath& path, int t_per_segment,
                                  int alpha_samples, double margin = 0.2);

using VectorField = std::function<std::vector<double>(std::span<const double>)>;
using MatrixField = std::function<std::vector<std::vector<double>>(std::span<const double>)>;

/// Regular grid lower + index * spacing, index in [0, counts).
struct RegularGrid {
  std::vector<double> lower;
  std::vector<double> spacing;
  std::vector<int> counts;

  int dim() const { return static_cast<int>(lower.size()); }
  std::size_t size() const;
  std::vector<double> point(std::size_t flat_index) const;
};

/// Central-difference Jacobian entries of a field on a grid: for every grid
/// point and pair j < l, upper = d f_j / d x_l and lower = d f_l / d x_j.
struct JacobianPairs {
  std::vector<double> upper;
  std::vector<double> lower;
};
JacobianPairs jacobian_pairs(const VectorField& field, const RegularGrid& grid, double step);

/// max |d xi_j/d x_l - d xi_l/d x_j|: zero iff the conormal translate is Lagrangian.
double lagrangian_symmetry_defect(const VectorField& xi, const RegularGrid& grid, double step = kDefaultStep);
/// max |d a_j/d x_l - d a_l/d x_j|: zero iff the connection is flat.
double flatness_defect(const VectorField& a, const RegularGrid& grid, double step = kDefaultStep);

/// A scalar potential on R^k with gradient and Hessian.
struct Potential {
  VectorField gradient;
  MatrixField hessian;
};

/// Conormal brane over S = {x_j = c_j, j > k} in an n-dimensional base, with
/// fiber coordinates xi_j = d phi / d x_j and connection
/// d + 2 pi i (sum a_j dx_j + sum b_l d xi_l), a_j = d psi / d x_j. Generating
/// xi and a from potentials makes the brane Lagrangian and flat by
/// construction.
struct ConormalBrane {
  int n = 0;
  int k = 0;
  std::vector<double> c;  ///< c_{k+1..n}
  std::vector<double> b;  ///< b_{k+1..n}
  Potential phi;
  Potential psi;

  std::vector<double> xi(std::span<const double> x) const { return phi.gradient(x); }
  std::vector<double> a(std::span<const double> x) const { return psi.gradient(x); }
};

ConormalBrane make_conormal_brane(int n, int k, std::vector<double> c, std::vector<double> b, Potential phi,
                                  Potential psi);

/// Potential of a constant field (all derivatives of the field vanish).
Potential constant_field_potential(std::vector<double> value);

}  // namespace syz
