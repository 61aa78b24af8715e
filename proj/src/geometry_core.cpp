#include "syz/geometry_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "syz/error.hpp"
#include "syz/kernels.hpp"

namespace syz {

SurfaceSpec::SurfaceSpec(std::vector<Complex> roots, double tol) : roots_(std::move(roots)), tol_(tol) {
  if (!(tol_ > 0.0) || !std::isfinite(tol_)) throw InputError("tolerance must be a positive finite number");
  if (roots_.size() < 2) throw InputError("need at least two roots (n >= 1)");
  singular_values_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const Complex a = roots_[i];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw InputError("root is not finite");
    if (std::abs(a) == 0.0) throw InputError("root a_" + std::to_string(i) + " is zero; z ranges over C^*");
    if (i > 0 && !(std::abs(a) > std::abs(roots_[i - 1]))) {
      throw InputError("root moduli must be strictly increasing (|a_" + std::to_string(i - 1) + "| >= |a_" +
                       std::to_string(i) + "|)");
    }
    singular_values_.push_back(std::log(std::abs(a)));
  }
}

Complex SurfaceSpec::f(Complex z) const {
  Complex value{1.0, 0.0};
  for (const Complex& a : roots_) value *= z - a;
  return value;
}

Complex SurfaceSpec::df(Complex z) const {
  // sum over i of prod_{j != i} (z - a_j)
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    Complex term{1.0, 0.0};
    for (std::size_t j = 0; j < roots_.size(); ++j) {
      if (j != i) term *= z - roots_[j];
    }
    total += term;
  }
  return total;
}

bool on_surface(const SurfaceSpec& spec, const PointY& p) {
  if (std::abs(p.z) == 0.0) return false;
  const Complex fz = spec.f(p.z);
  return std::abs(p.u * p.v - fz) <= spec.tol() * (1.0 + std::abs(fz));
}

PointY make_point(const SurfaceSpec& spec, Complex u, Complex v, Complex z) {
  PointY p{u, v, z};
  if (!on_surface(spec, p)) throw InputError("point does not satisfy uv = f(z) with z != 0");
  return p;
}

double moment_map(const PointY& p) { return 0.5 * (std::norm(p.u) - std::norm(p.v)); }

BasePoint fibration(const PointY& p) { return {std::log(std::abs(p.z)), moment_map(p)}; }

PointY circle_action(const PointY& p, double theta) {
  const Complex phase = std::polar(1.0, theta);
  return {phase * p.u, std::conj(phase) * p.v, p.z};
}

namespace {

bool near_singular_value(const SurfaceSpec& spec, double s) {
  for (double si : spec.singular_values()) {
    if (std::abs(s - si) <= spec.tol() * std::max(1.0, std::abs(si))) return true;
  }
  return false;
}

}  // namespace

FiberType classify_fiber(const SurfaceSpec& spec, BasePoint b) {
  const bool nodal = std::abs(b.lambda) <= spec.tol() && near_singular_value(spec, b.s);
  return nodal ? FiberType::Nodal : FiberType::Smooth;
}

bool on_wall(const SurfaceSpec& spec, BasePoint b) { return near_singular_value(spec, b.s); }

double disk_area(double lambda) { return std::abs(lambda); }

double reduced_form_density(const SurfaceSpec& spec, double lambda, Complex z) {
  if (std::abs(z) == 0.0) throw DomainError("reduced form is defined on C^* only (z = 0)");
  const double fz = std::abs(spec.f(z));
  const double r = std::hypot(lambda, fz);
  const double first = r > 0.0 ? std::norm(spec.df(z)) / (2.0 * r) : 0.0;
  return 0.5 * (first + 1.0 / std::norm(z));
}

PointY fiber_point(const SurfaceSpec& spec, BasePoint b, double arg_z, double alpha) {
  const Complex z = std::polar(std::exp(b.s), arg_z);
  const Complex fz = spec.f(z);
  // |u|^2 - |v|^2 = 2 lambda and |u||v| = |f(z)|
  const double root = std::hypot(b.lambda, std::abs(fz));
  const double u_mod = std::sqrt(b.lambda >= 0.0 ? b.lambda + root : std::norm(fz) / (root - b.lambda));
  if (u_mod == 0.0) {
    return {Complex{0.0, 0.0}, std::polar(std::sqrt(-2.0 * b.lambda), -alpha), z};
  }
  const Complex u = std::polar(u_mod, alpha);
  return {u, fz / u, z};
}

ParamSurface torus_fiber_surface(const SurfaceSpec& spec, BasePoint b, int samples) {
  if (samples < 1) throw InputError("need at least one sample per direction");
  ParamSurface surface{spec, [spec, b](double t, double alpha) { return fiber_point(spec, b, t, alpha); }, {}, {}};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 0; k < samples; ++k) {
    const double angle = two_pi * (k + 0.5) / samples;
    surface.t_samples.push_back(angle);
    surface.alpha_samples.push_back(angle);
  }
  return surface;
}

double lagrangian_defect(const ParamSurface& surface, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("finite-difference step must be positive");
  if (surface.t_samples.empty() || surface.alpha_samples.empty() || !surface.map) {
    throw InputError("degenerate sample grid");
  }
  const std::size_t count = surface.t_samples.size() * surface.alpha_samples.size();
  std::vector<double> buffers[13];
  for (auto& buffer : buffers) buffer.reserve(count);
  auto push = [&](int slot, Complex value) {
    buffers[slot].push_back(value.real());
    buffers[slot + 1].push_back(value.imag());
  };
  // Fourth-order central stencil. The pairing is a difference of terms of
  // size ~|f| that cancel exactly on a Lagrangian, so the second-order
  // stencil's truncation error would dominate for moderately large |f|.
  const double inv_twelve_step = 1.0 / (12.0 * step);
  auto derivative = [&](const PointY& m2, const PointY& m1, const PointY& p1, const PointY& p2) {
    auto d = [&](Complex a, Complex b, Complex c, Complex e) { return ((a - e) + 8.0 * (c - b)) * inv_twelve_step; };
    return PointY{d(m2.u, m1.u, p1.u, p2.u), d(m2.v, m1.v, p1.v, p2.v), d(m2.z, m1.z, p1.z, p2.z)};
  };
  for (double t : surface.t_samples) {
    for (double alpha : surface.alpha_samples) {
      const PointY center = surface.map(t, alpha);
      if (!on_surface(surface.spec, center)) throw InputError("parameterized surface leaves Y at a grid point");
      const PointY xt = derivative(surface.map(t - 2 * step, alpha), surface.map(t - step, alpha),
                                   surface.map(t + step, alpha), surface.map(t + 2 * step, alpha));
      const PointY xa = derivative(surface.map(t, alpha - 2 * step), surface.map(t, alpha - step),
                                   surface.map(t, alpha + step), surface.map(t, alpha + 2 * step));
      push(0, xt.u);
      push(2, xa.u);
      push(4, xt.v);
      push(6, xa.v);
      push(8, xt.z);
      push(10, xa.z);
      buffers[12].push_back(1.0 / std::norm(center.z));
    }
  }
  const kernels::TangentPairs batch{buffers[0], buffers[1], buffers[2],  buffers[3], buffers[4],
                                    buffers[5], buffers[6], buffers[7],  buffers[8], buffers[9],
                                    buffers[10], buffers[11], buffers[12]};
  return kernels::active().max_symplectic_pairing(batch);
}

}  // namespace syz
