#pragma once

#include <array>

#include "dispgal/geom.hpp"
#include "dispgal/grid.hpp"

namespace dispgal {

// r-visibility region of a query point. `region` is the positive-area part
// of Vis(q) as an orthogonal polygon. Degenerate parts of Vis(q) lie on the
// two axis lines through q (a point p with a shared coordinate is seen iff
// the connecting segment is inside); the reach fields give the visibility
// limits along those rays, so Vis(q) = region plus the axis cross.
// `frontiers` holds, per quadrant (up-right, up-left, down-left,
// down-right), the canonical Pareto points in original coordinates.
struct VisPolygon {
  Point origin;
  OrthoPolygon region;
  Rat reach_left, reach_right, reach_down, reach_up;
  std::array<std::vector<Point>, 4> frontiers;
};

// Exact membership in Vis(q), including the degenerate axis segments.
bool vis_contains(const VisPolygon& vis, const Point& p);

// Two points see each other iff their spanning rectangle lies in the closed
// polygon. Degenerate rectangles are segments.
bool sees(const OrthoPolygon& p, const Point& a, const Point& b);

// Fast path: both points' coordinates must be grid coordinates.
bool sees(const PolyGrid& g, const Point& a, const Point& b);

// r ⊆ Vis(g): four corner visibility suffices (Vis is orthoconvex).
bool covers_rect(const OrthoPolygon& p, const Point& g, const Rect& r);
bool covers_rect(const PolyGrid& grid, const Point& g, const Rect& r);

VisPolygon rvis_polygon(const OrthoPolygon& p, const Point& q);
VisPolygon rvis_polygon(const OrthoPolygon& p, const PolyGrid& grid,
                        const Point& q);

}  // namespace dispgal
