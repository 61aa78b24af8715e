#pragma once

// Toric side of the mirror: the fan of the crepant resolution of the A_n
// singularity, its affine charts (u_i, v_{i+1}) glued by
//   u_{i+1} = v_{i+1}^{-1},  u_i v_{i+1} = h = u_{i+1} v_{i+2},
// the removed divisor D = {h = 1}, the exceptional curves E_1..E_n and their
// intersection form, and the fan-from-triangulation builder for
// higher-dimensional toric Calabi-Yau resolutions.
//
// Lattice arithmetic is exact. Chart coordinates are templated on the field:
// GaussianRational gives exact transitions, std::complex<double> is used by
// the numeric callers.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syz/error.hpp"

namespace syz {

using LatticeVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<long long>>;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::int64_t pairing(const LatticeVector& m, const LatticeVector& n);
bool is_primitive(const LatticeVector& v);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const std::vector<LatticeVector>& rows);
/// Exact rank of an integer matrix.
int integer_rank(const std::vector<LatticeVector>& rows);

struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

/// Validating constructor: rays primitive of length dim, cones index valid
/// rays and are strictly convex (simplicial cones with independent rays).
Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones);

/// Rays a_i = (i, 1), i = 0..n+1, and cones sigma_i = <a_i, a_{i+1}>, i = 0..n.
Fan build_an_fan(int n);

/// |det| of a full-dimensional simplicial cone is 1.
bool is_unimodular(const Fan& fan, std::size_t cone);
bool is_smooth(const Fan& fan);
/// Every ray has last coordinate 1 (trivial canonical class).
bool is_crepant(const Fan& fan);

/// Affine chart of the cone sigma_i with dual generators
/// b_i = (1, -i) and b_{i+1} = (-1, i + 1), coordinates u_i = chi^{b_i},
/// v_{i+1} = chi^{b_{i+1}}.
struct ToricChart {
  int index = 0;
  LatticeVector b_u;  ///< b_i
  LatticeVector b_v;  ///< b_{i+1}
};

/// Throws InputError unless 0 <= i <= n. The pairings with the cone edges are
/// verified on construction.
ToricChart dual_chart(int i, int n);

/// Complex numbers with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re, BigRational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long re) : re_(re), im_(0) {}

  const BigRational& real() const { return re_; }
  const BigRational& imag() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  BigRational re_;
  BigRational im_;
};

namespace detail {
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
template <class T>
bool is_zero(const std::complex<T>& x) {
  return x == std::complex<T>{};
}
template <class T>
T one() {
  return T(1);
}
}  // namespace detail

/// Point of X_Sigma in the chart of sigma_i.
template <class T>
struct MirrorPoint {
  int chart = 0;
  T u;  ///< u_i
  T v;  ///< v_{i+1}

  /// The global function h = chi^{(0,1)} = u_i v_{i+1}.
  T h() const { return u * v; }
};

/// True iff the point lies in the mirror X_Sigma \ D, i.e. h != 1.
template <class T>
bool in_mirror(const MirrorPoint<T>& p) {
  return !(p.h() == detail::one<T>());
}

/// Move a point to the neighboring chart to_chart = chart +- 1.
/// chart i -> i+1: u_{i+1} = v_{i+1}^{-1}, v_{i+2} = h v_{i+1}  (needs v_{i+1} != 0)
/// chart i -> i-1: v_i = u_i^{-1},         u_{i-1} = h u_i       (needs u_i != 0)
template <class T>
MirrorPoint<T> chart_transition(const MirrorPoint<T>& p, int to_chart, int n) {
  if (to_chart < 0 || to_chart > n) throw InputError("target chart out of range");
  const T h = p.h();
  if (to_chart == p.chart + 1) {
    if (detail::is_zero(p.v)) throw DomainError("point is not in the overlap of the two charts (v = 0)");
    return {to_chart, detail::one<T>() / p.v, h * p.v};
  }
  if (to_chart == p.chart - 1) {
    if (detail::is_zero(p.u)) throw DomainError("point is not in the overlap of the two charts (u = 0)");
    return {to_chart, h * p.u, detail::one<T>() / p.u};
  }
  throw InputError("chart transitions connect neighboring charts only");
}

/// Exceptional curves through the point. In chart i, E_i = {v_{i+1} = 0}
/// (the divisor of the ray a_i) and E_{i+1} = {u_i = 0} (the ray a_{i+1});
/// the divisors of a_0 and a_{n+1} are not exceptional.
template <class T>
std::vector<int> exceptional_components(const MirrorPoint<T>& p, int n) {
  std::vector<int> result;
  if (detail::is_zero(p.v) && p.chart >= 1) result.push_back(p.chart);
  if (detail::is_zero(p.u) && p.chart + 1 <= n) result.push_back(p.chart + 1);
  return result;
}

/// Solve prev + next = k * ray (2-d fan, consecutive rays) and return -k, the
/// self-intersection of the curve of the interior ray.
long long self_intersection(const LatticeVector& prev, const LatticeVector& ray, const LatticeVector& next);

/// Intersection form of the compact curves of a 2-d fan whose rays are listed
/// in angular order: entries for the interior rays 1..rays-2.
IntMatrix intersection_matrix(const Fan& fan);
IntMatrix intersection_matrix(int n);

/// A triangulation of a lattice polytope P in Z^d (d = 1 or 2). Cells index
/// into points; the polytope defaults to the convex hull of the points.
struct LatticeTriangulation {
  int dim = 0;
  std::vector<LatticeVector> polytope;
  std::vector<LatticeVector> points;
  std::vector<std::vector<std::size_t>> cells;
};

struct FanReport {
  Fan fan;
  bool smooth = false;
  bool crepant = false;
  std::vector<std::size_t> singular_cones;  ///< cones with |det| > 1
};

/// Fan in Z^{d+1} with rays (w, 1) over the triangulation vertices and one
/// maximal cone over each cell. Throws InputError for non-simplicial,
/// degenerate, overlapping or non-covering cells.
FanReport build_fan_from_triangulation(const LatticeTriangulation& tri);

}  // namespace syz
