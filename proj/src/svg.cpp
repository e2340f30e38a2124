#include "pbs/svg.hpp"

#include <cfloat>
#include <cstdio>
#include <sstream>

namespace pbs {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string render_svg(const PolylineBundle& bundle,
                       const std::vector<int>* retained,
                       const RenderOptions& options) {
  double min_x = DBL_MAX, min_y = DBL_MAX, max_x = -DBL_MAX, max_y = -DBL_MAX;
  for (const Point& p : bundle.bends) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = extent > 0.0 ? 0.05 * extent : 1.0;
  const double s = options.scale;
  const double width = (max_x - min_x + 2 * margin) * s;
  const double height = (max_y - min_y + 2 * margin) * s;
  // SVG y grows downward
  auto px = [&](Point p) { return (p.x - min_x + margin) * s; };
  auto py = [&](Point p) { return (max_y - p.y + margin) * s; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << num(width) << " " << num(height) << "\">\n";

  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const char* color = kPalette[li % (sizeof kPalette / sizeof *kPalette)];
    out << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << num(options.stroke_width) << "\" d=\"";
    const auto& poly = bundle.polylines[li];
    for (size_t i = 0; i < poly.size(); ++i) {
      const Point p = bundle.bends[poly[i]];
      out << (i == 0 ? "M" : " L") << num(px(p)) << " " << num(py(p));
    }
    out << "\"/>\n";
  }

  if (retained) {
    const auto induced = induced_simplification(bundle, *retained);
    for (int li = 0; li < bundle.polyline_count(); ++li) {
      const char* color = kPalette[li % (sizeof kPalette / sizeof *kPalette)];
      out << "<path fill=\"none\" stroke=\"" << color
          << "\" stroke-opacity=\"0.45\" stroke-width=\""
          << num(3.0 * options.stroke_width) << "\" d=\"";
      for (size_t i = 0; i < induced[li].size(); ++i) {
        const Point p = bundle.bends[induced[li][i]];
        out << (i == 0 ? "M" : " L") << num(px(p)) << " " << num(py(p));
      }
      out << "\"/>\n";
    }
  }

  if (options.show_retained) {
    std::vector<char> mask(bundle.bend_count(), retained ? 0 : 1);
    if (retained) {
      for (int idx : *retained) mask[idx] = 1;
    }
    const double r = 2.0 * options.stroke_width;
    for (int b = 0; b < bundle.bend_count(); ++b) {
      const Point p = bundle.bends[b];
      out << "<circle cx=\"" << num(px(p)) << "\" cy=\"" << num(py(p))
          << "\" r=\"" << num(r) << "\" stroke=\"#333\" stroke-width=\""
          << num(0.5 * options.stroke_width) << "\" fill=\""
          << (mask[b] ? "#333" : "white") << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pbs
