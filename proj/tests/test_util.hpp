#pragma once

#include <vector>

#include "dispgal/geom.hpp"

namespace dispgal::testutil {

inline Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

inline OrthoPolygon unit_square() {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  return p;
}

// (0,0),(2,0),(2,1),(1,1),(1,2),(0,2): bottom bar plus left arm.
inline OrthoPolygon l_shape() {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)};
  return p;
}

// Two prongs joined by a bottom bar, opening upward.
inline OrthoPolygon u_shape() {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(3, 0), pt(3, 3), pt(2, 3),
             pt(2, 1), pt(1, 1), pt(1, 3), pt(0, 3)};
  return p;
}

// 3x3 square with the middle unit square removed.
inline OrthoPolygon holed_square() {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(3, 0), pt(3, 3), pt(0, 3)};
  p.holes = {{pt(1, 1), pt(1, 2), pt(2, 2), pt(2, 1)}};
  return p;
}

// Two 3x3 rooms joined by a unit corridor centered on the facing walls.
inline OfficePolygon two_room_office() {
  OfficePolygon o;
  o.rooms.push_back(Rect{pt(0, 0), pt(3, 3)});
  o.rooms.push_back(Rect{pt(4, 0), pt(7, 3)});
  Corridor c;
  c.rect = Rect{pt(3, 1), pt(4, 2)};
  c.room_a = 0;
  c.room_b = 1;
  o.corridors.push_back(c);
  return o;
}

}  // namespace dispgal::testutil
