#pragma once

// Hand-written SVG of the base and of paths in the Log annulus.
//
// Layout (user units, viewBox fixed):
//   base only      viewBox "0 0 640 400"
//   base + path    viewBox "0 0 1080 400", annulus panel at x in [640, 1080)
// Base panel: s runs left to right over [s_0 - 1, s_n + 1], lambda bottom to
// top over [-2, 2]; the plot area is x in [60, 600], y in [40, 360].
// Annulus panel: a point e^{s + i theta} is drawn at radius
// 40 + 150 (s - s_0 + 0.5) / (s_n - s_0 + 1) around (860, 200), angle
// counter-clockwise from the positive x axis.
// Elements carry classes: axis, wall (dashed), node (x marks at (s_i, 0)),
// circle, root, reference (dashed) and brane-path. Coordinates are printed
// with three decimals so output bytes depend only on the input.

#include <string>

#include "syz/branes.hpp"
#include "syz/geometry_core.hpp"

namespace syz {

std::string plot_base_svg(const SurfaceSpec& spec, const LiftedPath* path = nullptr);

}  // namespace syz
