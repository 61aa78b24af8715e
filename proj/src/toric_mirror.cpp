#include "syz/toric_mirror.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace syz {

std::int64_t pairing(const LatticeVector& m, const LatticeVector& n) {
  if (m.size() != n.size()) throw InputError("pairing of vectors of different rank");
  std::int64_t total = 0;
  for (std::size_t k = 0; k < m.size(); ++k) total += m[k] * n[k];
  return total;
}

bool is_primitive(const LatticeVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  return g == 1;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const std::vector<LatticeVector>& rows) {
  BigMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  return m;
}

// Fraction-free Gaussian elimination. Returns the rank; on a square matrix of
// full rank, sign * m[r-1][r-1] is the determinant.
int bareiss(BigMatrix& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

BigInt determinant(const std::vector<LatticeVector>& rows) {
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InputError("determinant of a non-square matrix");
  }
  if (rows.empty()) return 1;
  BigMatrix m = to_big(rows);
  int sign = 1;
  const int rank = bareiss(m, sign);
  if (rank < static_cast<int>(rows.size())) return 0;
  return sign * m.back().back();
}

int integer_rank(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  for (const auto& row : rows) {
    if (row.size() != rows[0].size()) throw InputError("ragged integer matrix");
  }
  BigMatrix m = to_big(rows);
  int sign = 1;
  return bareiss(m, sign);
}

Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones) {
  if (dim < 1) throw InputError("fan dimension must be positive");
  for (const auto& ray : rays) {
    if (static_cast<int>(ray.size()) != dim) throw InputError("ray has the wrong number of coordinates");
    if (!is_primitive(ray)) throw InputError("ray is not a primitive lattice vector");
  }
  for (const auto& cone : max_cones) {
    if (cone.empty()) throw InputError("empty cone");
    std::set<std::size_t> distinct(cone.begin(), cone.end());
    if (distinct.size() != cone.size()) throw InputError("cone repeats a ray");
    std::vector<LatticeVector> generators;
    for (std::size_t index : cone) {
      if (index >= rays.size()) throw InputError("cone references a missing ray");
      generators.push_back(rays[index]);
    }
    // Independent generators make the cone simplicial, hence strictly convex.
    if (integer_rank(generators) != static_cast<int>(cone.size())) {
      throw InputError("cone generators are linearly dependent (non-simplicial or not strictly convex)");
    }
  }
  return Fan{dim, std::move(rays), std::move(max_cones)};
}

Fan build_an_fan(int n) {
  if (n < 1) throw InputError("A_n fan needs n >= 1");
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  for (int i = 0; i <= n + 1; ++i) rays.push_back({i, 1});
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) cones.push_back({i, i + 1});
  return make_fan(2, std::move(rays), std::move(cones));
}

bool is_unimodular(const Fan& fan, std::size_t cone) {
  const auto& indices = fan.max_cones.at(cone);
  if (static_cast<int>(indices.size()) != fan.dim) return false;
  std::vector<LatticeVector> rows;
  for (std::size_t index : indices) rows.push_back(fan.rays[index]);
  return abs(determinant(rows)) == 1;
}

bool is_smooth(const Fan& fan) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (!is_unimodular(fan, c)) return false;
  }
  return true;
}

bool is_crepant(const Fan& fan) {
  return std::all_of(fan.rays.begin(), fan.rays.end(), [](const LatticeVector& r) { return r.back() == 1; });
}

ToricChart dual_chart(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw InputError("chart index out of range 0..n");
  ToricChart chart{i, {1, -i}, {-1, i + 1}};
  const LatticeVector a_i{i, 1};
  const LatticeVector a_next{i + 1, 1};
  // Each generator vanishes on one edge of sigma_i and is 1 on the other.
  if (pairing(chart.b_u, a_i) != 0 || pairing(chart.b_u, a_next) != 1 || pairing(chart.b_v, a_next) != 0 ||
      pairing(chart.b_v, a_i) != 1) {
    throw DomainError("dual generators fail the pairing check");
  }
  return chart;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const BigRational d = b.re_ * b.re_ + b.im_ * b.im_;
  if (d == 0) throw DomainError("division by zero");
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

std::complex<double> GaussianRational::to_complex() const {
  return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::string GaussianRational::str() const {
  std::ostringstream out;
  out << re_ << (im_ < 0 ? " - " : " + ") << abs(im_) << "i";
  return out.str();
}

long long self_intersection(const LatticeVector& prev, const LatticeVector& ray, const LatticeVector& next) {
  if (prev.size() != 2 || ray.size() != 2 || next.size() != 2) throw InputError("self-intersection needs 2-d rays");
  const std::int64_t sx = prev[0] + next[0];
  const std::int64_t sy = prev[1] + next[1];
  if (sx * ray[1] - sy * ray[0] != 0) throw InputError("neighboring rays do not satisfy a linear relation with the ray");
  const std::int64_t norm = pairing(ray, ray);
  const std::int64_t dot = sx * ray[0] + sy * ray[1];
  if (dot % norm != 0) throw InputError("relation coefficient is not an integer");
  return -(dot / norm);
}

IntMatrix intersection_matrix(const Fan& fan) {
  if (fan.dim != 2) throw InputError("intersection form is implemented for 2-d fans only");
  const std::size_t m = fan.rays.size();
  if (m < 3) throw InputError("fan has no interior rays");
  std::set<std::pair<std::size_t, std::size_t>> cones;
  for (const auto& cone : fan.max_cones) {
    if (cone.size() == 2) cones.insert({std::min(cone[0], cone[1]), std::max(cone[0], cone[1])});
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (!cones.contains({k, k + 1})) throw InputError("rays are not listed in angular order of the cones");
  }
  const std::size_t size = m - 2;
  IntMatrix result(size, std::vector<long long>(size, 0));
  for (std::size_t k = 1; k + 1 < m; ++k) {
    result[k - 1][k - 1] = self_intersection(fan.rays[k - 1], fan.rays[k], fan.rays[k + 1]);
    for (std::size_t l = 1; l + 1 < m; ++l) {
      if (l != k && cones.contains({std::min(k, l), std::max(k, l)})) result[k - 1][l - 1] = 1;
    }
  }
  return result;
}

IntMatrix intersection_matrix(int n) { return intersection_matrix(build_an_fan(n)); }

namespace {

using Point2 = std::array<std::int64_t, 2>;

__int128 orient(const Point2& p, const Point2& q, const Point2& r) {
  return static_cast<__int128>(q[0] - p[0]) * (r[1] - p[1]) - static_cast<__int128>(q[1] - p[1]) * (r[0] - p[0]);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

__int128 twice_area(const std::vector<Point2>& polygon) {
  __int128 total = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& p = polygon[i];
    const Point2& q = polygon[(i + 1) % polygon.size()];
    total += static_cast<__int128>(p[0]) * q[1] - static_cast<__int128>(q[0]) * p[1];
  }
  return total < 0 ? -total : total;
}

// Closed triangles with disjoint interiors are separated by a line through
// one of their edges.
bool interiors_overlap(std::array<Point2, 3> a, std::array<Point2, 3> b) {
  auto ccw = [](std::array<Point2, 3>& t) {
    if (orient(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  };
  ccw(a);
  ccw(b);
  auto separated_by_edge_of = [](const std::array<Point2, 3>& t, const std::array<Point2, 3>& other) {
    for (int e = 0; e < 3; ++e) {
      const Point2& p = t[e];
      const Point2& q = t[(e + 1) % 3];
      if (std::all_of(other.begin(), other.end(), [&](const Point2& r) { return orient(p, q, r) <= 0; })) {
        return true;
      }
    }
    return false;
  };
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

bool on_open_segment(const Point2& p, const Point2& q, const Point2& r) {
  if (orient(p, q, r) != 0) return false;
  const auto dot = static_cast<__int128>(r[0] - p[0]) * (q[0] - p[0]) + static_cast<__int128>(r[1] - p[1]) * (q[1] - p[1]);
  const auto len = static_cast<__int128>(q[0] - p[0]) * (q[0] - p[0]) + static_cast<__int128>(q[1] - p[1]) * (q[1] - p[1]);
  return dot > 0 && dot < len;
}

void validate_1d(const LatticeTriangulation& tri, const std::vector<std::int64_t>& hull) {
  const std::int64_t lo = *std::min_element(hull.begin(), hull.end());
  const std::int64_t hi = *std::max_element(hull.begin(), hull.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> segments;
  std::int64_t covered = 0;
  for (const auto& cell : tri.cells) {
    std::int64_t a = tri.points[cell[0]][0], b = tri.points[cell[1]][0];
    if (a == b) throw InputError("degenerate cell");
    if (a > b) std::swap(a, b);
    if (a < lo || b > hi) throw InputError("cell leaves the polytope");
    segments.emplace_back(a, b);
    covered += b - a;
  }
  std::sort(segments.begin(), segments.end());
  for (std::size_t k = 1; k < segments.size(); ++k) {
    if (segments[k].first < segments[k - 1].second) throw InputError("cells overlap");
  }
  if (covered != hi - lo) throw InputError("cells do not cover the polytope");
}

void validate_2d(const LatticeTriangulation& tri, const std::vector<Point2>& hull_input) {
  const std::vector<Point2> hull = convex_hull(hull_input);
  if (hull.size() < 3) throw InputError("polytope is not two-dimensional");
  auto inside = [&](const Point2& r) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (orient(hull[i], hull[(i + 1) % hull.size()], r) < 0) return false;
    }
    return true;
  };
  auto point = [&](std::size_t index) { return Point2{tri.points[index][0], tri.points[index][1]}; };
  std::vector<std::array<Point2, 3>> triangles;
  __int128 covered = 0;
  for (const auto& cell : tri.cells) {
    std::array<Point2, 3> t{point(cell[0]), point(cell[1]), point(cell[2])};
    const __int128 area = orient(t[0], t[1], t[2]);
    if (area == 0) throw InputError("degenerate cell");
    for (const auto& p : t) {
      if (!inside(p)) throw InputError("cell vertex lies outside the polytope");
    }
    covered += area < 0 ? -area : area;
    triangles.push_back(t);
  }
  for (std::size_t a = 0; a < triangles.size(); ++a) {
    for (std::size_t b = a + 1; b < triangles.size(); ++b) {
      if (interiors_overlap(triangles[a], triangles[b])) throw InputError("cells overlap");
    }
  }
  // Cells must meet in common faces: no vertex in the middle of another edge.
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      for (const auto& other : triangles) {
        for (const auto& r : other) {
          if (on_open_segment(t[e], t[(e + 1) % 3], r)) throw InputError("cells do not meet along common faces");
        }
      }
    }
  }
  if (covered != twice_area(hull)) throw InputError("cells do not cover the polytope");
}

}  // namespace

FanReport build_fan_from_triangulation(const LatticeTriangulation& tri) {
  if (tri.dim != 1 && tri.dim != 2) throw InputError("triangulations are supported for polytopes of dimension 1 and 2");
  if (tri.points.empty() || tri.cells.empty()) throw InputError("empty triangulation");
  for (const auto& p : tri.points) {
    if (static_cast<int>(p.size()) != tri.dim) throw InputError("point has the wrong number of coordinates");
  }
  {
    std::set<LatticeVector> distinct(tri.points.begin(), tri.points.end());
    if (distinct.size() != tri.points.size()) throw InputError("duplicate triangulation points");
  }
  for (const auto& p : tri.polytope) {
    if (static_cast<int>(p.size()) != tri.dim) throw InputError("polytope vertex has the wrong number of coordinates");
  }
  for (const auto& cell : tri.cells) {
    if (static_cast<int>(cell.size()) != tri.dim + 1) throw InputError("cell is not a simplex");
    std::set<std::size_t> distinct(cell.begin(), cell.end());
    if (distinct.size() != cell.size()) throw InputError("cell repeats a vertex");
    for (std::size_t index : cell) {
      if (index >= tri.points.size()) throw InputError("cell references a missing point");
    }
  }
  const auto& hull_source = tri.polytope.empty() ? tri.points : tri.polytope;
  if (tri.dim == 1) {
    std::vector<std::int64_t> hull;
    for (const auto& p : hull_source) hull.push_back(p[0]);
    validate_1d(tri, hull);
  } else {
    std::vector<Point2> hull;
    for (const auto& p : hull_source) hull.push_back({p[0], p[1]});
    validate_2d(tri, hull);
  }

  // Rays over the vertices actually used by cells, in point order.
  std::vector<std::size_t> ray_of(tri.points.size(), tri.points.size());
  for (const auto& cell : tri.cells) {
    for (std::size_t index : cell) ray_of[index] = 0;
  }
  std::vector<LatticeVector> rays;
  for (std::size_t k = 0; k < tri.points.size(); ++k) {
    if (ray_of[k] == tri.points.size()) continue;
    ray_of[k] = rays.size();
    LatticeVector ray = tri.points[k];
    ray.push_back(1);
    rays.push_back(std::move(ray));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& cell : tri.cells) {
    std::vector<std::size_t> cone;
    for (std::size_t index : cell) cone.push_back(ray_of[index]);
    cones.push_back(std::move(cone));
  }

  FanReport report{make_fan(tri.dim + 1, std::move(rays), std::move(cones)), false, false, {}};
  for (std::size_t c = 0; c < report.fan.max_cones.size(); ++c) {
    if (!is_unimodular(report.fan, c)) report.singular_cones.push_back(c);
  }
  report.smooth = report.singular_cones.empty();
  report.crepant = is_crepant(report.fan);
  if (!report.crepant) throw DomainError("ray off the height-one hyperplane");
  return report;
}

}  // namespace syz
