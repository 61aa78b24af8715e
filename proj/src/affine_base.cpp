#include "syz/affine_base.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "syz/error.hpp"
#include "syz/kernels.hpp"

namespace syz {

IntMatrix2 monodromy_matrix(Orientation orientation) {
  if (orientation == Orientation::Ccw) return {{{1, 1}, {0, 1}}};
  return {{{1, -1}, {0, 1}}};
}

IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

std::array<long long, 2> act_on_exponent(const IntMatrix2& m, std::array<long long, 2> e) {
  return {e[0] * m[0][0] + e[1] * m[1][0], e[0] * m[0][1] + e[1] * m[1][1]};
}

double affine_height(double lambda) { return -lambda / kAffineScale; }

SemiFlatCoords::SemiFlatCoords(ChartSide side_, Complex c1_, Complex c2_) : side(side_), c1(c1_), c2(c2_) {
  if (c1 == Complex{} || c2 == Complex{}) throw DomainError("torus-chart coordinates must be nonzero");
}

namespace {

void require_side(const SemiFlatCoords& c, ChartSide side) {
  if (c.side != side) throw InputError("coordinates are given in the wrong chart");
}

bool is_chart_boundary(Complex w) { return w == Complex{-1.0, 0.0}; }

// Shared by both directions: the gluing is symmetric under u <-> v.
Complex corrected_partner(Region region, Complex x, Complex w) {
  const Complex inv_x = 1.0 / x;
  if (region == Region::Plus) return inv_x * (1.0 + w);
  return inv_x * w * (1.0 + 1.0 / w);
}

}  // namespace

SemiFlatCoords semiflat_transition(Region region, const SemiFlatCoords& vw) {
  require_side(vw, ChartSide::V);
  return {ChartSide::U, semiflat_glue(region, vw.c1, vw.c2), vw.c2};
}

SemiFlatCoords semiflat_inverse(Region region, const SemiFlatCoords& uw) {
  require_side(uw, ChartSide::U);
  return {ChartSide::V, semiflat_glue(region, uw.c1, uw.c2), uw.c2};
}

std::optional<SemiFlatCoords> corrected_transition(Region region, const SemiFlatCoords& vw) {
  require_side(vw, ChartSide::V);
  if (is_chart_boundary(vw.c2)) return std::nullopt;
  return SemiFlatCoords{ChartSide::U, corrected_partner(region, vw.c1, vw.c2), vw.c2};
}

std::optional<SemiFlatCoords> corrected_inverse(Region region, const SemiFlatCoords& uw) {
  require_side(uw, ChartSide::U);
  if (is_chart_boundary(uw.c2)) return std::nullopt;
  return SemiFlatCoords{ChartSide::V, corrected_partner(region, uw.c1, uw.c2), uw.c2};
}

void corrected_transition_batch(Region region, std::span<const double> v_re, std::span<const double> v_im,
                                std::span<const double> w_re, std::span<const double> w_im,
                                std::span<double> u_re, std::span<double> u_im) {
  const std::size_t count = u_re.size();
  if (v_re.size() != count || v_im.size() != count || w_re.size() != count || w_im.size() != count ||
      u_im.size() != count) {
    throw InputError("batch arrays must have equal length");
  }
  kernels::active().corrected_gluing(region == Region::Plus, {v_re, v_im}, {w_re, w_im}, {u_re, u_im});
}

Complex global_w(double lambda, Complex holonomy, double tol) {
  if (std::abs(std::abs(holonomy) - 1.0) > tol) throw DomainError("holonomy must be a unit complex number");
  return std::exp(-lambda) * holonomy;
}

BaseStructure::BaseStructure(SurfaceSpec spec) : spec_(std::move(spec)) {}

void BaseStructure::check_index(int i) const {
  if (i < 0 || i > n()) throw InputError("strip index " + std::to_string(i) + " out of range 0.." + std::to_string(n()));
}

std::pair<double, double> BaseStructure::strip(int i) const {
  check_index(i);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double lo = i == 0 ? -inf : spec_.singular_value(i - 1);
  const double hi = i == n() ? inf : spec_.singular_value(i + 1);
  return {lo, hi};
}

bool BaseStructure::in_strip(int i, BasePoint b) const {
  const auto [lo, hi] = strip(i);
  return lo < b.s && b.s < hi;
}

bool BaseStructure::in_u(int i, BasePoint b) const {
  if (!in_strip(i, b)) return false;
  const double si = spec_.singular_value(i);
  const double next = i == n() ? std::numeric_limits<double>::infinity() : spec_.singular_value(i + 1);
  return !(b.lambda == 0.0 && si <= b.s && b.s < next);
}

bool BaseStructure::in_v(int i, BasePoint b) const {
  if (!in_strip(i, b)) return false;
  const double si = spec_.singular_value(i);
  const double prev = i == 0 ? -std::numeric_limits<double>::infinity() : spec_.singular_value(i - 1);
  return !(b.lambda == 0.0 && prev < b.s && b.s <= si);
}

std::optional<Region> BaseStructure::region(int i, BasePoint b) const {
  if (!in_strip(i, b)) return std::nullopt;
  if (b.lambda == 0.0) throw DomainError("lambda = 0 lies on the cut; B_i^+ and B_i^- are undefined there");
  return b.lambda > 0.0 ? Region::Plus : Region::Minus;
}

}  // namespace syz
