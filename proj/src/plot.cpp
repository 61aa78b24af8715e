#include "syz/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace syz {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct BaseFrame {
  double s_lo, s_hi;
  double x(double s) const { return 60.0 + 540.0 * (s - s_lo) / (s_hi - s_lo); }
  static double y(double lambda) { return 200.0 - 80.0 * lambda; }
};

struct AnnulusFrame {
  double s0, width;
  double radius(double s) const { return 40.0 + 150.0 * (s - s0 + 0.5) / width; }
  double x(double s, double theta) const { return 860.0 + radius(s) * std::cos(theta); }
  double y(double s, double theta) const { return 200.0 - radius(s) * std::sin(theta); }
};

void polyline(std::ostringstream& out, const AnnulusFrame& frame, const LiftedPath& path, const char* cls) {
  constexpr int kSamplesPerSegment = 64;
  out << "<polyline class=\"" << cls << "\" fill=\"none\" points=\"";
  const int total = kSamplesPerSegment * static_cast<int>(path.segment_count());
  for (int k = 0; k <= total; ++k) {
    const LiftedVertex p = path.lifted_at(static_cast<double>(k) / total);
    if (k > 0) out << ' ';
    out << fmt(frame.x(p.s, p.theta)) << ',' << fmt(frame.y(p.s, p.theta));
  }
  out << "\"/>\n";
}

}  // namespace

std::string plot_base_svg(const SurfaceSpec& spec, const LiftedPath* path) {
  const auto values = spec.singular_values();
  const BaseFrame base{values.front() - 1.0, values.back() + 1.0};
  const int width = path ? 1080 : 640;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " 400\" width=\"" << width
      << "\" height=\"400\">\n";
  out << "<style>.axis{stroke:#000}.wall{stroke:#888;stroke-dasharray:6 4}.node{stroke:#c00;stroke-width:2}"
         ".circle{stroke:#888;fill:none}.reference{stroke:#06c;stroke-dasharray:4 3}"
         ".brane-path{stroke:#c60;stroke-width:1.5}.root{fill:#c00}</style>\n";

  out << "<g id=\"base\">\n";
  out << "<line class=\"axis\" x1=\"60.000\" y1=\"200.000\" x2=\"600.000\" y2=\"200.000\"/>\n";
  out << "<line class=\"axis\" x1=\"60.000\" y1=\"40.000\" x2=\"60.000\" y2=\"360.000\"/>\n";
  out << "<text x=\"610.000\" y=\"204.000\">s</text>\n";
  out << "<text x=\"52.000\" y=\"32.000\">&#955;</text>\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = base.x(values[i]);
    out << "<line class=\"wall\" x1=\"" << fmt(x) << "\" y1=\"40.000\" x2=\"" << fmt(x) << "\" y2=\"360.000\"/>\n";
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = base.x(values[i]);
    const double y = BaseFrame::y(0.0);
    out << "<g class=\"node\"><line x1=\"" << fmt(x - 6) << "\" y1=\"" << fmt(y - 6) << "\" x2=\"" << fmt(x + 6)
        << "\" y2=\"" << fmt(y + 6) << "\"/><line x1=\"" << fmt(x - 6) << "\" y1=\"" << fmt(y + 6) << "\" x2=\""
        << fmt(x + 6) << "\" y2=\"" << fmt(y - 6) << "\"/></g>\n";
  }
  out << "</g>\n";

  if (path) {
    const AnnulusFrame annulus{values.front(), values.back() - values.front() + 1.0};
    out << "<g id=\"annulus\">\n";
    for (double s : values) {
      out << "<circle class=\"circle\" cx=\"860.000\" cy=\"200.000\" r=\"" << fmt(annulus.radius(s)) << "\"/>\n";
    }
    for (int i = 0; i <= spec.n(); ++i) {
      const double theta = std::arg(spec.root(i));
      out << "<circle class=\"root\" cx=\"" << fmt(annulus.x(values[i], theta)) << "\" cy=\""
          << fmt(annulus.y(values[i], theta)) << "\" r=\"3.000\"/>\n";
    }
    if (path->target() >= 1 && path->target() <= spec.n()) {
      polyline(out, annulus, reference_path(spec, path->target()), "reference");
    }
    polyline(out, annulus, *path, "brane-path");
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace syz
