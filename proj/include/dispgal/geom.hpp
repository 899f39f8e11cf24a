#pragma once

#include <array>
#include <string>
#include <vector>

#include "dispgal/rational.hpp"

namespace dispgal {

struct Point {
  Rat x, y;

  Point() = default;
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    int c = cmp(x, o.x);
    if (c != 0) return c < 0;
    return y < o.y;
  }
};

// Manhattan distance in the plane (not the geodesic).
inline Rat l1(const Point& a, const Point& b) {
  return rat_abs(a.x - b.x) + rat_abs(a.y - b.y);
}

// Axis-aligned rectangle, lo = bottom-left, hi = top-right. Positive area
// unless explicitly used as a degenerate span (rect_between of aligned points).
struct Rect {
  Point lo, hi;

  Rect() = default;
  Rect(Point l, Point h) : lo(std::move(l)), hi(std::move(h)) {}

  Rat width() const { return hi.x - lo.x; }
  Rat height() const { return hi.y - lo.y; }
  bool degenerate() const { return lo.x == hi.x || lo.y == hi.y; }
  bool valid() const { return lo.x < hi.x && lo.y < hi.y; }

  bool contains(const Point& p) const {
    return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
  }
  // Closed rectangles share at least one point.
  bool touches(const Rect& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
  }
  // Interiors overlap.
  bool overlaps(const Rect& o) const {
    return lo.x < o.hi.x && o.lo.x < hi.x && lo.y < o.hi.y && o.lo.y < hi.y;
  }
  std::array<Point, 4> corners() const {
    return {Point{lo.x, lo.y}, Point{hi.x, lo.y}, Point{lo.x, hi.y},
            Point{hi.x, hi.y}};
  }
  bool operator==(const Rect& o) const { return lo == o.lo && hi == o.hi; }
};

// Spanning rectangle of two points; degenerate when they share a coordinate.
inline Rect rect_between(const Point& a, const Point& b) {
  return Rect{Point{std::min(a.x, b.x), std::min(a.y, b.y)},
              Point{std::max(a.x, b.x), std::max(a.y, b.y)}};
}

// Orthogonal polygon with holes. Outer ring counter-clockwise, holes
// clockwise; every edge axis-parallel, consecutive edges alternating.
struct OrthoPolygon {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  // Outer vertices first (ring order), then each hole's.
  std::vector<Point> all_vertices() const;
  std::size_t vertex_count() const;
};

enum class Axis { horizontal, vertical };

struct Corridor {
  Rect rect;
  int room_a = -1;
  int room_b = -1;
  // Derived during validation; horizontal links rooms left/right.
  Axis orientation = Axis::vertical;
};

// Rooms joined by strictly narrower corridors, each linking exactly two rooms.
struct OfficePolygon {
  std::vector<Rect> rooms;
  std::vector<Corridor> corridors;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

ValidationReport validate_ortho(const OrthoPolygon& p);

// Also fills in corridor orientations (on a copy-safe basis: pass by
// non-const reference to get orientations and low/high ordering normalized).
ValidationReport validate_office(const OfficePolygon& o);
ValidationReport validate_office(OfficePolygon& o);

// Boundary of the union of all room and corridor rectangles.
// Throws std::invalid_argument when the office is invalid or disconnected.
OrthoPolygon office_to_polygon(const OfficePolygon& o);

// Boundary of the union of arbitrary positive-area rectangles.
// Throws std::invalid_argument if the union is disconnected or pinched.
OrthoPolygon rect_union_polygon(const std::vector<Rect>& rects);

// Closed containment: the boundary counts as inside.
bool contains_point(const OrthoPolygon& p, const Point& q);

// Closed rectangle (possibly degenerate) inside the closed region.
bool contains_rect(const OrthoPolygon& p, const Rect& r);

// For a validated office: true if the corridor's long axis is vertical.
bool corridor_vertical(const Rect& corridor, const std::vector<Rect>& rooms,
                       int room_a, int room_b);

}  // namespace dispgal
