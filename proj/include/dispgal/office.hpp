#pragma once

#include <array>

#include "dispgal/witness.hpp"

namespace dispgal {

// Validated office together with its compiled polygon context and the
// vertex-id bookkeeping the wall/corner rules need.
struct OfficeContext {
  OfficePolygon office;
  PolyContext ctx;

  struct CorridorInfo {
    Rect rect;
    bool vertical = false;
    int low_room = -1;   // below (vertical) / left (horizontal)
    int high_room = -1;  // above / right
    // Vertex ids of the corridor corners: bl, br, tl, tr.
    int v_bl = -1, v_br = -1, v_tl = -1, v_tr = -1;
  };
  std::vector<CorridorInfo> corridors;
  std::vector<std::array<int, 4>> room_corners;  // BL, BR, TL, TR ids

  int vertex(const Point& p) const { return ctx.vertex_index(p); }
  const Point& vpoint(int id) const { return ctx.vertices[static_cast<std::size_t>(id)]; }
  Rat vdist(int a, int b) const { return ctx.dist.d[a][b]; }
};

// Throws std::invalid_argument when the office is invalid.
OfficeContext build_office_context(const OfficePolygon& o);

}  // namespace dispgal
