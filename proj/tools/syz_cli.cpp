// syz: command-line front end.
//
// Exit codes: 0 success, 1 malformed input, 2 a mathematical precondition
// failed (non-smooth fan, inadmissible path, point in the nodal set, ...).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "syz/branes.hpp"
#include "syz/categories.hpp"
#include "syz/error.hpp"
#include "syz/json_io.hpp"
#include "syz/plot.hpp"
#include "syz/syz_functor.hpp"
#include "syz/toric_mirror.hpp"

namespace {

using syz::io::Json;

struct Options {
  bool pretty = false;
  std::string out;
  double tol = syz::kDefaultTol;
  bool tol_given = false;  // --tol beats a "tol" field in the roots file
};

void emit(const Options& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw syz::InputError("cannot write " + opts.out);
  file << text;
}

void emit(const Options& opts, const Json& j) { emit(opts, j.dump(opts.pretty ? 2 : -1) + "\n"); }

syz::SurfaceSpec load_surface(const std::string& path, const Options& opts) {
  Json j = syz::io::read_file(path);
  if (opts.tol_given && j.is_object()) j.erase("tol");
  return syz::io::surface_from_json(j, opts.tol);
}

syz::Complex unit_from_pair(const std::vector<double>& pair, const char* name) {
  if (pair.size() != 2) throw syz::InputError(std::string(name) + " expects re,im");
  return {pair[0], pair[1]};
}

int run_fan(const Options& opts, int n, const std::string& triangulation) {
  syz::FanReport report;
  if (!triangulation.empty()) {
    report = syz::build_fan_from_triangulation(syz::io::triangulation_from_json(syz::io::read_file(triangulation)));
  } else {
    report.fan = syz::build_an_fan(n);
    report.smooth = syz::is_smooth(report.fan);
    report.crepant = syz::is_crepant(report.fan);
  }
  emit(opts, syz::io::to_json(report));
  if (!report.smooth) {
    std::cerr << "fan is not smooth: " << report.singular_cones.size() << " singular cone(s)\n";
    return 2;
  }
  return 0;
}

int run_classify(const Options& opts, const std::string& roots, double s, double lambda) {
  const auto spec = load_surface(roots, opts);
  const syz::BasePoint b{s, lambda};
  const bool nodal = syz::classify_fiber(spec, b) == syz::FiberType::Nodal;
  Json out{{"s", s}, {"lambda", lambda}, {"fiber", nodal ? "nodal" : "smooth"}, {"on_wall", syz::on_wall(spec, b)}};
  if (syz::on_wall(spec, b)) out["disk_area"] = syz::disk_area(lambda);
  emit(opts, out);
  return 0;
}

// Diagnoses the path and returns an exit code; 0 means strongly admissible.
int check_path(const syz::SurfaceSpec& spec, const syz::LiftedPath& path) {
  if (auto violation = syz::admissibility_violation(spec, path)) {
    std::cerr << "path is not admissible: " << *violation << "\n";
    return 2;
  }
  if (!syz::is_strongly_admissible(spec, path)) {
    const auto v = path.vertices();
    std::size_t k = 0;
    while (k + 1 < v.size() && v[k + 1].s > v[k].s) ++k;
    std::cerr << "path is not strongly admissible: s stops increasing on segment " << k << "\n";
    return 2;
  }
  return 0;
}

int run_wind(const Options& opts, const std::string& roots, const std::string& path_file) {
  const auto spec = load_surface(roots, opts);
  const auto path = syz::io::path_from_json(syz::io::read_file(path_file));
  if (const int code = check_path(spec, path)) return code;
  const int w = syz::winding_number(path, syz::reference_path(spec, path.target()));
  emit(opts, Json{{"target", {path.target() - 1, path.target()}},
                  {"winding", w},
                  {"reference_convention", syz::reference_path_convention()}});
  return 0;
}

int run_transform(const Options& opts, const std::string& roots, const std::string& path_file, double s,
                  double lambda, const std::vector<double>& h1, const std::vector<double>& h2, bool fiber_mode) {
  const auto spec = load_surface(roots, opts);
  if (fiber_mode) {
    const syz::BBrane b = syz::transform_fiber(spec, s, lambda, unit_from_pair(h1, "--h1"), unit_from_pair(h2, "--h2"));
    emit(opts, syz::io::to_json(b));
    return 0;
  }
  if (path_file.empty()) throw syz::InputError("transform needs --path or --s/--lambda");
  const auto path = syz::io::path_from_json(syz::io::read_file(path_file));
  if (const int code = check_path(spec, path)) return code;
  const syz::BBrane b = syz::transform_sphere_brane(spec, path);
  Json out = syz::io::to_json(b);
  out["winding"] = -std::get<syz::ExceptionalBundle>(b).degree;
  out["reference_convention"] = syz::reference_path_convention();
  emit(opts, out);
  return 0;
}

int run_hms(const Options& opts, int n) {
  const bool pass = syz::hms_check(n);
  std::ostringstream text;
  char line[160];
  std::snprintf(line, sizeof line, "%4s %4s  %-16s %-16s\n", "i", "j", "Fukaya", "D^b coherent");
  text << line;
  Json pairs = Json::array();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto a = syz::fukaya_hom(i, j, n);
      const auto b = syz::bside_ext(i, j, n);
      std::snprintf(line, sizeof line, "%4d %4d  %-16s %-16s%s\n", i, j, a.str().c_str(), b.str().c_str(),
                    a == b ? "" : "  <- mismatch");
      text << line;
      pairs.push_back({{"i", i}, {"j", j}, {"fukaya", syz::io::to_json(a)}, {"bside", syz::io::to_json(b)}});
    }
  }
  text << (pass ? "PASS" : "FAIL") << "\n";
  if (opts.pretty || opts.out.empty()) {
    emit(opts, text.str());
  } else {
    emit(opts, Json{{"n", n}, {"pass", pass}, {"pairs", pairs}});
  }
  return pass ? 0 : 2;
}

int run_twist(const Options& opts, int n, int i, const std::vector<long long>& cls) {
  if (cls.empty()) {
    emit(opts, Json{{"n", n}, {"i", i}, {"matrix", syz::io::to_json(syz::twist_matrix(i, n))}});
    return 0;
  }
  emit(opts, Json{{"n", n}, {"i", i}, {"class", syz::spherical_twist(i, cls, n)}});
  return 0;
}

int run_plot(const Options& opts, const std::string& roots, const std::string& path_file) {
  const auto spec = load_surface(roots, opts);
  if (path_file.empty()) {
    emit(opts, syz::plot_base_svg(spec));
    return 0;
  }
  const auto path = syz::io::path_from_json(syz::io::read_file(path_file));
  emit(opts, syz::plot_base_svg(spec, &path));
  return 0;
}

double default_tol() {
  const char* env = std::getenv("SYZ_TOL");
  if (!env || !*env) return syz::kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0.0)) throw syz::InputError("SYZ_TOL must be a positive number");
  return tol;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"SYZ mirror constructions for A_n resolutions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", opts.pretty, "Indented JSON / human-readable tables");
  app.add_option("-o,--out", opts.out, "Write output to a file instead of stdout");
  double tol_override = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_override, "Tolerance (default 1e-9, or SYZ_TOL)");

  int n = 0;
  std::string triangulation, roots, path_file;
  double s = 0.0, lambda = 0.0;
  std::vector<double> h1{1.0, 0.0}, h2{1.0, 0.0};
  int index = 0;
  std::vector<long long> cls;

  auto* fan = app.add_subcommand("fan", "A_n fan or fan of a lattice triangulation");
  auto* fan_n = fan->add_option("--n", n, "A_n resolution");
  auto* fan_t = fan->add_option("--triangulation", triangulation, "Triangulation JSON");
  fan_n->excludes(fan_t);
  fan->require_option(1);

  auto* classify = app.add_subcommand("classify", "Classify the fiber over a base point");
  classify->add_option("--roots", roots, "Surface JSON")->required();
  classify->add_option("--s", s)->required();
  classify->add_option("--lambda", lambda)->required();

  auto* wind = app.add_subcommand("wind", "Winding number of a path against the reference path");
  wind->add_option("--roots", roots, "Surface JSON")->required();
  wind->add_option("--path", path_file, "Path JSON")->required();

  auto* transform = app.add_subcommand("transform", "SYZ transform of a sphere brane or a fiber");
  transform->add_option("--roots", roots, "Surface JSON")->required();
  auto* t_path = transform->add_option("--path", path_file, "Path JSON");
  auto* t_s = transform->add_option("--s", s, "Fiber: log|z|");
  auto* t_lambda = transform->add_option("--lambda", lambda, "Fiber: moment map value");
  transform->add_option("--h1", h1, "Fiber: holonomy re,im along arg z")->delimiter(',')->expected(2);
  transform->add_option("--h2", h2, "Fiber: holonomy re,im along arg u")->delimiter(',')->expected(2);
  t_path->excludes(t_s);
  t_path->excludes(t_lambda);
  t_s->needs(t_lambda);
  t_lambda->needs(t_s);

  auto* hms = app.add_subcommand("hms", "Compare morphism dimensions on both sides");
  hms->add_option("--n", n)->required();

  auto* twist = app.add_subcommand("twist", "Spherical twist on K-theory");
  twist->add_option("--n", n)->required();
  twist->add_option("--i", index)->required();
  twist->add_option("--class", cls, "Coordinates in the basis E_1..E_n")->delimiter(',');

  auto* plot = app.add_subcommand("plot-base", "SVG of the base (and a path in the Log annulus)");
  plot->alias("plot");
  plot->add_option("--roots", roots, "Surface JSON")->required();
  plot->add_option("--path", path_file, "Path JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    opts.tol_given = static_cast<bool>(*tol_opt);
    opts.tol = opts.tol_given ? tol_override : default_tol();
    if (!(opts.tol > 0.0)) throw syz::InputError("--tol must be positive");
    if (*fan) return run_fan(opts, n, triangulation);
    if (*classify) return run_classify(opts, roots, s, lambda);
    if (*wind) return run_wind(opts, roots, path_file);
    if (*transform) return run_transform(opts, roots, path_file, s, lambda, h1, h2, static_cast<bool>(*t_s));
    if (*hms) return run_hms(opts, n);
    if (*twist) return run_twist(opts, n, index, cls);
    if (*plot) return run_plot(opts, roots, path_file);
  } catch (const syz::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const syz::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
