#include "syz/json_io.hpp"

#include <fstream>
#include <sstream>

#include "syz/error.hpp"

namespace syz::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

LatticeVector lattice_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  LatticeVector v;
  for (const auto& x : j) v.push_back(integer(x, what));
  return v;
}

std::vector<LatticeVector> lattice_vectors(const Json& j, const char* key) {
  std::vector<LatticeVector> out;
  for (const auto& x : array_field(j, key)) out.push_back(lattice_vector(x, key));
  return out;
}

std::vector<std::vector<std::size_t>> index_lists(const Json& j, const char* key) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& list : array_field(j, key)) {
    if (!list.is_array()) throw InputError(std::string(key) + " entries must be arrays of indices");
    std::vector<std::size_t> indices;
    for (const auto& x : list) {
      const long long k = integer(x, key);
      if (k < 0) throw InputError(std::string(key) + " indices must be nonnegative");
      indices.push_back(static_cast<std::size_t>(k));
    }
    out.push_back(std::move(indices));
  }
  return out;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

SurfaceSpec surface_from_json(const Json& j, double default_tol) {
  std::vector<Complex> roots;
  for (const auto& r : array_field(j, "roots")) {
    if (r.is_number()) {
      roots.emplace_back(r.get<double>(), 0.0);
    } else if (r.is_array() && r.size() == 2) {
      roots.emplace_back(number(r[0], "root"), number(r[1], "root"));
    } else {
      throw InputError("roots must be [re, im] pairs");
    }
  }
  double tol = default_tol;
  if (j.contains("tol")) tol = number(j["tol"], "tol");
  return SurfaceSpec(std::move(roots), tol);
}

Json to_json(const SurfaceSpec& spec) {
  Json roots = Json::array();
  for (Complex a : spec.roots()) roots.push_back(complex_json(a));
  return {{"roots", roots}, {"tol", spec.tol()}};
}

Fan fan_from_json(const Json& j) {
  const long long dim = integer(field(j, "dim"), "dim");
  return make_fan(static_cast<int>(dim), lattice_vectors(j, "rays"), index_lists(j, "cones"));
}

Json to_json(const Fan& fan) {
  return {{"dim", fan.dim}, {"rays", fan.rays}, {"cones", fan.max_cones}};
}

Json to_json(const FanReport& report) {
  Json out = to_json(report.fan);
  out["smooth"] = report.smooth;
  out["crepant"] = report.crepant;
  out["singular_cones"] = report.singular_cones;
  return out;
}

LatticeTriangulation triangulation_from_json(const Json& j) {
  LatticeTriangulation tri;
  tri.dim = static_cast<int>(integer(field(j, "dim"), "dim"));
  tri.points = lattice_vectors(j, "points");
  tri.cells = index_lists(j, "cells");
  if (j.contains("polytope")) tri.polytope = lattice_vectors(j, "polytope");
  return tri;
}

LiftedPath path_from_json(const Json& j) {
  const Json& target = field(j, "target");
  int i = 0;
  if (target.is_array() && target.size() == 2) {
    const long long lo = integer(target[0], "target");
    const long long hi = integer(target[1], "target");
    if (hi != lo + 1) throw InputError("target must be [i-1, i]");
    i = static_cast<int>(hi);
  } else {
    i = static_cast<int>(integer(target, "target"));
  }
  std::vector<LiftedVertex> vertices;
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_array() || v.size() != 2) throw InputError("vertices must be [s, theta] pairs");
    vertices.push_back({number(v[0], "vertex"), number(v[1], "vertex")});
  }
  return LiftedPath(i, std::move(vertices));
}

Json to_json(const LiftedPath& path) {
  Json vertices = Json::array();
  for (const auto& v : path.vertices()) vertices.push_back({v.s, v.theta});
  return {{"target", {path.target() - 1, path.target()}}, {"vertices", vertices}};
}

Json to_json(const BBrane& brane) {
  struct Visitor {
    Json operator()(const Skyscraper& p) const {
      return {{"support", "point"},
              {"chart", p.point.chart},
              {"u", complex_json(p.point.u)},
              {"v", complex_json(p.point.v)},
              {"w", complex_json(p.w)},
              {"exceptional", p.exceptional}};
    }
    Json operator()(const ExceptionalBundle& e) const {
      return {{"support", "E_i"}, {"i", e.i}, {"degree", e.degree}};
    }
    Json operator()(const CycleBrane& c) const {
      Json a = Json::array();
      for (Complex x : c.A) a.push_back(complex_json(x));
      return {{"support", "cycle"}, {"n", c.n}, {"k", c.k}, {"A", a}, {"b", c.source.b}, {"c", c.source.c}};
    }
  };
  return std::visit(Visitor{}, brane);
}

Json to_json(const GradedHom& hom) {
  Json out = Json::object();
  for (const auto& [degree, dim] : hom.dims()) out[std::to_string(degree)] = dim;
  return out;
}

Json to_json(const IntMatrix& m) { return Json(m); }

}  // namespace syz::io
