#pragma once

// JSON encodings of the library types. Readers throw InputError with a short
// description of what is malformed.
//
//   SurfaceSpec     {"roots": [[re, im], ...], "tol": t}
//   Fan             {"dim": d, "rays": [[...], ...], "cones": [[...], ...]}
//   triangulation   {"dim": d, "points": [[...], ...], "cells": [[...], ...], "polytope": [[...], ...]}
//   LiftedPath      {"target": [i-1, i], "vertices": [[s, theta], ...]}
//   BBrane          {"support": "E_i" | "point" | "cycle", ...}

#include <string>

#include "json.hpp"
#include "syz/branes.hpp"
#include "syz/categories.hpp"
#include "syz/geometry_core.hpp"
#include "syz/syz_functor.hpp"
#include "syz/toric_mirror.hpp"

namespace syz::io {

using Json = nlohmann::ordered_json;

/// Parse a file; missing files and syntax errors become InputError.
Json read_file(const std::string& path);

SurfaceSpec surface_from_json(const Json& j, double default_tol = kDefaultTol);
Json to_json(const SurfaceSpec& spec);

Fan fan_from_json(const Json& j);
Json to_json(const Fan& fan);
Json to_json(const FanReport& report);

LatticeTriangulation triangulation_from_json(const Json& j);

LiftedPath path_from_json(const Json& j);
Json to_json(const LiftedPath& path);

Json to_json(const BBrane& brane);
Json to_json(const GradedHom& hom);
Json to_json(const IntMatrix& m);

/// Complex numbers are written as [re, im].
Json complex_json(Complex z);

}  // namespace syz::io
