#pragma once

// The singular integral affine base B = R^2 of the torus fibration: strips
// B_i, the charts U_i / V_i, the half-strips B_i^+ / B_i^-, semi-flat
// coordinates, the focus-focus monodromy, and the gluing of the mirror charts
// with and without the instanton correction factor (1 + w).

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "syz/geometry_core.hpp"

namespace syz {

enum class Region { Plus, Minus };
enum class Orientation { Ccw, Cw };

using IntMatrix2 = std::array<std::array<long long, 2>, 2>;

/// Monodromy of the affine structure around a singular point (s_i, 0).
IntMatrix2 monodromy_matrix(Orientation orientation);
IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b);

/// Action on exponent vectors (a, b) of monomials u^a w^b, as a row vector:
/// (a, b) -> (a, b) * M. The ccw monodromy sends (1, 0) to (1, 1), u -> u w.
std::array<long long, 2> act_on_exponent(const IntMatrix2& m, std::array<long long, 2> exponent);

/// Affine height x_2 = -lambda / (2 pi) so that |w| = |exp 2 pi (x_2 + i y_2)| = e^{-lambda}.
/// This is the only place the normalization constant is fixed.
inline constexpr double kAffineScale = 2.0 * std::numbers::pi;
double affine_height(double lambda);

enum class ChartSide {
  U,  ///< coordinates (u_i, w) on U_i
  V,  ///< coordinates (v_{i+1}, w) on V_i
};

/// Torus-chart coordinates; both entries lie in C^*.
struct SemiFlatCoords {
  ChartSide side;
  Complex c1;  ///< u_i or v_{i+1}
  Complex c2;  ///< w

  SemiFlatCoords(ChartSide side, Complex c1, Complex c2);
};

/// Uncorrected gluing V_i -> U_i: u = v^{-1} on B_i^+, u = v^{-1} w on B_i^-.
SemiFlatCoords semiflat_transition(Region region, const SemiFlatCoords& vw);
/// Its inverse U_i -> V_i.
SemiFlatCoords semiflat_inverse(Region region, const SemiFlatCoords& uw);

/// Instanton-corrected gluing V_i -> U_i:
///   u = v^{-1}(1 + w)           on B_i^+,
///   u = v^{-1} w (1 + w^{-1})   on B_i^-.
/// Returns nullopt when w = -1: the point leaves the torus chart and lies on
/// an exceptional curve, which only the toric charts describe.
std::optional<SemiFlatCoords> corrected_transition(Region region, const SemiFlatCoords& vw);
/// Inverse U_i -> V_i (same formulas with u and v exchanged).
std::optional<SemiFlatCoords> corrected_inverse(Region region, const SemiFlatCoords& uw);

/// The uncorrected formula over any field type.
template <class T>
T semiflat_glue(Region region, const T& x, const T& w) {
  const T one(1);
  if (region == Region::Plus) return one / x;
  return (one / x) * w;
}

/// The corrected gluing formula over any field type (exact rationals in
/// particular): the partner coordinate of x given w.
template <class T>
T corrected_glue(Region region, const T& x, const T& w) {
  const T one(1);
  if (region == Region::Plus) return (one / x) * (one + w);
  return (one / x) * w * (one + one / w);
}

/// Batched corrected gluing on split complex arrays (SIMD kernel).
/// Inputs must avoid v = 0, w = 0 and w = -1.
void corrected_transition_batch(Region region, std::span<const double> v_re, std::span<const double> v_im,
                                std::span<const double> w_re, std::span<const double> w_im,
                                std::span<double> u_re, std::span<double> u_im);

/// The global coordinate w = e^{-lambda} hol. Throws DomainError unless |hol| = 1.
Complex global_w(double lambda, Complex holonomy, double tol = kDefaultTol);

/// Strips, charts and half-strips derived from a SurfaceSpec.
class BaseStructure {
 public:
  explicit BaseStructure(SurfaceSpec spec);

  const SurfaceSpec& spec() const { return spec_; }
  int n() const { return spec_.n(); }

  /// B_i = (s_{i-1}, s_{i+1}) x R with s_{-1} = -inf, s_{n+1} = +inf.
  std::pair<double, double> strip(int i) const;
  bool in_strip(int i, BasePoint b) const;

  /// U_i = B_i minus [s_i, s_{i+1}) x {0}.
  bool in_u(int i, BasePoint b) const;
  /// V_i = B_i minus (s_{i-1}, s_i] x {0}.
  bool in_v(int i, BasePoint b) const;

  /// Which component of U_i cap V_i contains b; nullopt outside the strip.
  /// Throws DomainError for lambda = 0 (the cut, where the chart decomposition
  /// is undefined).
  std::optional<Region> region(int i, BasePoint b) const;

 private:
  void check_index(int i) const;
  SurfaceSpec spec_;
};

}  // namespace syz
