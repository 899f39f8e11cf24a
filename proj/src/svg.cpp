#include "dispgal/svg.hpp"

#include <fstream>
#include <sstream>

namespace dispgal {

namespace {

double dv(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& v : inst.poly.all_vertices()) {
    minx = std::min(minx, dv(v.x));
    maxx = std::max(maxx, dv(v.x));
    miny = std::min(miny, dv(v.y));
    maxy = std::max(maxy, dv(v.y));
  }
  double span = std::max(maxx - minx, maxy - miny);
  double margin = 0.05 * span + 0.5;
  // Flip y so the drawing matches mathematical orientation.
  auto X = [&](const Rat& x) { return dv(x) - minx + margin; };
  auto Y = [&](const Rat& y) { return maxy - dv(y) + margin; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
     << (maxx - minx + 2 * margin) << " " << (maxy - miny + 2 * margin)
     << "\">\n";
  double lw = span / 400.0 + 0.01;

  auto ring_path = [&](const std::vector<Point>& ring) {
    std::ostringstream p;
    for (std::size_t i = 0; i < ring.size(); ++i)
      p << (i == 0 ? "M " : "L ") << X(ring[i].x) << " " << Y(ring[i].y) << " ";
    p << "Z ";
    return p.str();
  };

  os << "<path fill-rule=\"evenodd\" fill=\"#ececec\" stroke=\"#222\" "
        "stroke-width=\""
     << lw << "\" d=\"";
  os << ring_path(inst.poly.outer);
  for (const auto& h : inst.poly.holes) os << ring_path(h);
  os << "\"/>\n";

  if (inst.office) {
    auto rect = [&](const Rect& r, const char* fill) {
      os << "<rect x=\"" << X(r.lo.x) << "\" y=\"" << Y(r.hi.y) << "\" width=\""
         << (dv(r.hi.x) - dv(r.lo.x)) << "\" height=\""
         << (dv(r.hi.y) - dv(r.lo.y)) << "\" fill=\"" << fill << "\"/>\n";
    };
    for (const auto& r : inst.office->rooms) rect(r, "#dddddd");
    for (const auto& c : inst.office->corridors) rect(c.rect, "#9f9f9f");
  }

  if (sol) {
    double r = span / 120.0 + 0.04;
    // Highlight the closest pair in blue.
    const Point* pa = nullptr;
    const Point* pb = nullptr;
    if (sol->guards.size() >= 2 && sol->dispersion) {
      // Identify a pair realizing the dispersion by plain L1 first, falling
      // back to the first two guards (display only).
      for (std::size_t i = 0; i < sol->guards.size() && !pa; ++i)
        for (std::size_t j = i + 1; j < sol->guards.size() && !pa; ++j)
          if (l1(sol->guards[i], sol->guards[j]) == *sol->dispersion) {
            pa = &sol->guards[i];
            pb = &sol->guards[j];
          }
      if (!pa) {
        pa = &sol->guards[0];
        pb = &sol->guards[1];
      }
      os << "<line x1=\"" << X(pa->x) << "\" y1=\"" << Y(pa->y) << "\" x2=\""
         << X(pb->x) << "\" y2=\"" << Y(pb->y)
         << "\" stroke=\"#1f4fd8\" stroke-dasharray=\"" << 4 * lw << " "
         << 3 * lw << "\" stroke-width=\"" << 1.5 * lw << "\"/>\n";
    }
    for (const auto& g : sol->guards) {
      bool hl = (pa && g == *pa) || (pb && g == *pb);
      os << "<circle cx=\"" << X(g.x) << "\" cy=\"" << Y(g.y) << "\" r=\"" << r
         << "\" fill=\"" << (hl ? "#1f4fd8" : "#d8201f") << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const std::string& path, const Instance& inst, const Solution* sol) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_svg(inst, sol);
}

}  // namespace dispgal
