#include "syz/branes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syz/error.hpp"
#include "syz/kernels.hpp"

namespace syz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double scaled(double tol, double magnitude) { return tol * std::max(1.0, std::abs(magnitude)); }

// Distance from theta to the nearest lift of the angle arg.
double angular_distance(double theta, double arg) { return std::abs(std::remainder(theta - arg, kTwoPi)); }

bool is_lift_of(const SurfaceSpec& spec, const LiftedVertex& p, int root) {
  const double s_root = spec.singular_value(root);
  const double arg_root = std::arg(spec.root(root));
  return std::abs(p.s - s_root) <= scaled(spec.tol(), s_root) &&
         angular_distance(p.theta, arg_root) <= scaled(spec.tol(), p.theta);
}

bool same_point_of_cstar(const LiftedVertex& a, const LiftedVertex& b, double tol) {
  return std::abs(a.s - b.s) <= scaled(tol, a.s) && angular_distance(a.theta, b.theta) <= scaled(tol, a.theta);
}

}  // namespace

LiftedPath::LiftedPath(int target, std::vector<LiftedVertex> vertices) : target_(target), vertices_(std::move(vertices)) {
  if (target_ < 1) throw InputError("path target index must be >= 1 (path from a_{i-1} to a_i)");
  if (vertices_.size() < 2) throw InputError("a path needs at least two vertices");
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& v = vertices_[k];
    if (!std::isfinite(v.s) || !std::isfinite(v.theta)) throw InputError("path vertex is not finite");
    if (k > 0 && v.s == vertices_[k - 1].s && v.theta == vertices_[k - 1].theta) {
      throw InputError("consecutive path vertices coincide");
    }
  }
}

LiftedVertex LiftedPath::lifted_at(double t) const {
  const double m = static_cast<double>(segment_count());
  const double scaled_t = t * m;
  const std::size_t k = static_cast<std::size_t>(std::clamp(std::floor(scaled_t), 0.0, m - 1.0));
  const double tau = scaled_t - static_cast<double>(k);
  const LiftedVertex& p = vertices_[k];
  const LiftedVertex& q = vertices_[k + 1];
  return {p.s + tau * (q.s - p.s), p.theta + tau * (q.theta - p.theta)};
}

double LiftedPath::length() const {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
    total += std::hypot(vertices_[k + 1].s - vertices_[k].s, vertices_[k + 1].theta - vertices_[k].theta);
  }
  return total;
}

LiftedVertex LiftedPath::at_length(double sigma) const {
  std::size_t k = 0;
  double start = 0.0;
  double len = 0.0;
  for (;; ++k) {
    len = std::hypot(vertices_[k + 1].s - vertices_[k].s, vertices_[k + 1].theta - vertices_[k].theta);
    if (k + 2 == vertices_.size() || sigma < start + len) break;
    start += len;
  }
  const double tau = (sigma - start) / len;
  const LiftedVertex& p = vertices_[k];
  const LiftedVertex& q = vertices_[k + 1];
  return {p.s + tau * (q.s - p.s), p.theta + tau * (q.theta - p.theta)};
}

Complex LiftedPath::point_at(double t) const {
  const LiftedVertex x = lifted_at(t);
  return std::polar(std::exp(x.s), x.theta);
}

std::optional<std::string> admissibility_violation(const SurfaceSpec& spec, const LiftedPath& path) {
  const int i = path.target();
  if (i < 1 || i > spec.n()) {
    return "target index " + std::to_string(i) + " is outside 1.." + std::to_string(spec.n());
  }
  if (!is_lift_of(spec, path.front(), i - 1)) return "path does not start at a lift of a_" + std::to_string(i - 1);
  if (!is_lift_of(spec, path.back(), i)) return "path does not end at a lift of a_" + std::to_string(i);

  const auto vertices = path.vertices();
  const std::size_t last = vertices.size() - 2;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const LiftedVertex& p = vertices[k];
    const LiftedVertex& q = vertices[k + 1];
    const double ds = q.s - p.s;
    const double dtheta = q.theta - p.theta;
    const double length2 = ds * ds + dtheta * dtheta;
    const double theta_lo = std::min(p.theta, q.theta) - 1.0;
    const double theta_hi = std::max(p.theta, q.theta) + 1.0;
    for (int j = 0; j <= spec.n(); ++j) {
      const double s_root = spec.singular_value(j);
      const double arg_root = std::arg(spec.root(j));
      const double tol = scaled(spec.tol(), s_root);
      for (double m = std::ceil((theta_lo - arg_root) / kTwoPi); arg_root + m * kTwoPi <= theta_hi; m += 1.0) {
        const double theta_root = arg_root + m * kTwoPi;
        const double tau = std::clamp(((s_root - p.s) * ds + (theta_root - p.theta) * dtheta) / length2, 0.0, 1.0);
        const double dist = std::hypot(p.s + tau * ds - s_root, p.theta + tau * dtheta - theta_root);
        if (dist > tol) continue;
        const double along = std::sqrt(length2);
        const bool is_start = k == 0 && j == i - 1 && tau * along <= tol &&
                              std::abs(theta_root - path.front().theta) <= scaled(spec.tol(), theta_root);
        const bool is_end = k == last && j == i && (1.0 - tau) * along <= tol &&
                            std::abs(theta_root - path.back().theta) <= scaled(spec.tol(), theta_root);
        if (!is_start && !is_end) return "path passes through a lift of the root a_" + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

bool is_admissible(const SurfaceSpec& spec, const LiftedPath& path) {
  return !admissibility_violation(spec, path).has_value();
}

bool is_strongly_admissible(const SurfaceSpec& spec, const LiftedPath& path) {
  if (auto violation = admissibility_violation(spec, path)) throw DomainError("path is not admissible: " + *violation);
  const auto vertices = path.vertices();
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    if (!(vertices[k + 1].s > vertices[k].s)) return false;
  }
  return true;
}

LiftedPath reference_path(const SurfaceSpec& spec, int i) {
  if (i < 1 || i > spec.n()) throw InputError("reference path index out of range 1..n");
  const double start = std::arg(spec.root(i - 1));
  double delta = std::remainder(std::arg(spec.root(i)) - start, kTwoPi);
  if (delta <= -std::numbers::pi + spec.tol()) delta = std::numbers::pi;
  return LiftedPath(i, {{spec.singular_value(i - 1), start}, {spec.singular_value(i), start + delta}});
}

std::string reference_path_convention() {
  return "reference path: straight segment in (log|z|, arg z) from (s_{i-1}, Arg a_{i-1}) to the lift of "
         "arg a_i nearest Arg a_{i-1}; half-turn ties go counter-clockwise";
}

int winding_number(const LiftedPath& path, const LiftedPath& reference, double residual_tol) {
  constexpr double kEndpointTol = 1e-9;
  if (!same_point_of_cstar(path.front(), reference.front(), kEndpointTol) ||
      !same_point_of_cstar(path.back(), reference.back(), kEndpointTol)) {
    throw DomainError("path and reference do not share endpoints");
  }
  // The lift of the path is fixed by its starting angle.
  const double shift = std::round((reference.front().theta - path.front().theta) / kTwoPi) * kTwoPi;
  const double turns = (path.back().theta + shift - reference.back().theta) / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > residual_tol) throw DomainError("winding residual exceeds tolerance");
  return static_cast<int>(rounded);
}

int intersection_count(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("sphere index out of range 1..n");
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? 1 : 0;
}

SphereBrane make_sphere_brane(const SurfaceSpec& spec, LiftedPath path, Complex holonomy) {
  if (auto violation = admissibility_violation(spec, path)) throw DomainError("path is not admissible: " + *violation);
  if (std::abs(std::abs(holonomy) - 1.0) > spec.tol()) throw DomainError("holonomy must be a unit complex number");
  return {std::move(path), holonomy};
}

ParamSurface sphere_brane_surface(const SurfaceSpec& spec, const LiftedPath& path, int t_per_segment,
                                  int alpha_samples, double margin) {
  if (t_per_segment < 1 || alpha_samples < 1) throw InputError("need at least one sample per direction");
  if (!(margin > 0.0) || !std::isfinite(margin)) throw InputError("sample margin must be positive");
  auto map = [spec, path](double sigma, double alpha) {
    const LiftedVertex x = path.at_length(sigma);
    const Complex z = std::polar(std::exp(x.s), x.theta);
    const Complex fz = spec.f(z);
    const double r = std::sqrt(std::abs(fz));
    if (r == 0.0) return PointY{Complex{}, Complex{}, z};
    const Complex u = std::polar(r, alpha);
    return PointY{u, fz / u, z};
  };
  auto far_enough = [&](const LiftedVertex& x) {
    for (const auto& v : path.vertices()) {
      if (std::hypot(x.s - v.s, x.theta - v.theta) < margin) return false;
    }
    for (int j = 0; j <= spec.n(); ++j) {
      const double dtheta = std::remainder(x.theta - std::arg(spec.root(j)), kTwoPi);
      if (std::hypot(x.s - spec.singular_value(j), dtheta) < margin) return false;
    }
    return true;
  };
  ParamSurface surface{spec, map, {}, {}};
  const auto vertices = path.vertices();
  double start = 0.0;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const double len = std::hypot(vertices[k + 1].s - vertices[k].s, vertices[k + 1].theta - vertices[k].theta);
    for (int j = 0; j < t_per_segment; ++j) {
      const double sigma = start + len * (j + 0.5) / t_per_segment;
      if (far_enough(path.at_length(sigma))) surface.t_samples.push_back(sigma);
    }
    start += len;
  }
  if (surface.t_samples.empty()) throw InputError("no sample points at the requested margin from roots and kinks");
  for (int j = 0; j < alpha_samples; ++j) surface.alpha_samples.push_back(kTwoPi * (j + 0.5) / alpha_samples);
  return surface;
}

std::size_t RegularGrid::size() const {
  std::size_t total = 1;
  for (int c : counts) total *= static_cast<std::size_t>(std::max(c, 0));
  return total;
}

std::vector<double> RegularGrid::point(std::size_t flat_index) const {
  std::vector<double> x(lower.size());
  for (std::size_t d = lower.size(); d-- > 0;) {
    const auto count = static_cast<std::size_t>(counts[d]);
    x[d] = lower[d] + spacing[d] * static_cast<double>(flat_index % count);
    flat_index /= count;
  }
  return x;
}

JacobianPairs jacobian_pairs(const VectorField& field, const RegularGrid& grid, double step) {
  const int dim = grid.dim();
  if (dim < 1 || grid.spacing.size() != grid.lower.size() || grid.counts.size() != grid.lower.size()) {
    throw InputError("degenerate sample grid");
  }
  if (std::any_of(grid.counts.begin(), grid.counts.end(), [](int c) { return c < 1; })) {
    throw InputError("degenerate sample grid");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("finite-difference step must be positive");
  if (!field) throw InputError("missing field");
  JacobianPairs pairs;
  const auto k = static_cast<std::size_t>(dim);
  std::vector<std::vector<double>> jac(k, std::vector<double>(k));
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> x = grid.point(g);
    for (std::size_t l = 0; l < k; ++l) {
      const double saved = x[l];
      x[l] = saved + step;
      const std::vector<double> plus = field(x);
      x[l] = saved - step;
      const std::vector<double> minus = field(x);
      x[l] = saved;
      if (plus.size() != k || minus.size() != k) throw InputError("field has the wrong number of components");
      for (std::size_t j = 0; j < k; ++j) jac[j][l] = (plus[j] - minus[j]) / (2.0 * step);
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        pairs.upper.push_back(jac[j][l]);
        pairs.lower.push_back(jac[l][j]);
      }
    }
  }
  return pairs;
}

double lagrangian_symmetry_defect(const VectorField& xi, const RegularGrid& grid, double step) {
  const JacobianPairs pairs = jacobian_pairs(xi, grid, step);
  return kernels::active().max_abs_difference(pairs.upper, pairs.lower);
}

double flatness_defect(const VectorField& a, const RegularGrid& grid, double step) {
  const JacobianPairs pairs = jacobian_pairs(a, grid, step);
  return kernels::active().max_abs_difference(pairs.upper, pairs.lower);
}

ConormalBrane make_conormal_brane(int n, int k, std::vector<double> c, std::vector<double> b, Potential phi,
                                  Potential psi) {
  if (n < 1 || k < 0 || k > n) throw InputError("conormal brane needs 0 <= k <= n and n >= 1");
  const auto codim = static_cast<std::size_t>(n - k);
  if (c.size() != codim || b.size() != codim) throw InputError("need n - k constants c_j and b_j");
  if (k > 0 && (!phi.gradient || !psi.gradient)) throw InputError("potentials need gradients");
  return {n, k, std::move(c), std::move(b), std::move(phi), std::move(psi)};
}

Potential constant_field_potential(std::vector<double> value) {
  const std::size_t k = value.size();
  return {[value](std::span<const double>) { return value; },
          [k](std::span<const double>) { return std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)); }};
}

}  // namespace syz
