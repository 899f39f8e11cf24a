#include "dispgal/worstcase.hpp"

#include <algorithm>
#include <stdexcept>

#include "dispgal/visibility.hpp"

namespace dispgal {

OfficeContext build_office_context(const OfficePolygon& o) {
  OfficeContext oc;
  oc.office = o;
  ValidationReport rep = validate_office(oc.office);
  if (!rep.ok())
    throw std::invalid_argument("invalid office polygon:\n" + rep.to_string());
  oc.ctx = build_context(office_to_polygon(oc.office));

  for (const auto& c : oc.office.corridors) {
    OfficeContext::CorridorInfo info;
    info.rect = c.rect;
    info.vertical = c.orientation == Axis::vertical;
    const Rect& ra = oc.office.rooms[static_cast<std::size_t>(c.room_a)];
    if (info.vertical) {
      bool a_below = ra.hi.y == c.rect.lo.y;
      info.low_room = a_below ? c.room_a : c.room_b;
      info.high_room = a_below ? c.room_b : c.room_a;
    } else {
      bool a_left = ra.hi.x == c.rect.lo.x;
      info.low_room = a_left ? c.room_a : c.room_b;
      info.high_room = a_left ? c.room_b : c.room_a;
    }
    info.v_bl = oc.vertex(Point{c.rect.lo.x, c.rect.lo.y});
    info.v_br = oc.vertex(Point{c.rect.hi.x, c.rect.lo.y});
    info.v_tl = oc.vertex(Point{c.rect.lo.x, c.rect.hi.y});
    info.v_tr = oc.vertex(Point{c.rect.hi.x, c.rect.hi.y});
    if (info.v_bl < 0 || info.v_br < 0 || info.v_tl < 0 || info.v_tr < 0)
      throw std::logic_error("corridor corner is not a polygon vertex");
    oc.corridors.push_back(info);
  }
  for (const auto& r : oc.office.rooms) {
    std::array<int, 4> ids{oc.vertex(Point{r.lo.x, r.lo.y}),
                           oc.vertex(Point{r.hi.x, r.lo.y}),
                           oc.vertex(Point{r.lo.x, r.hi.y}),
                           oc.vertex(Point{r.hi.x, r.hi.y})};
    for (int id : ids)
      if (id < 0) throw std::logic_error("room corner is not a polygon vertex");
    oc.room_corners.push_back(ids);
  }
  return oc;
}

namespace {

bool all_integer(const OfficePolygon& o) {
  auto ok = [](const Rat& r) { return r.get_den() == 1; };
  for (const auto& r : o.rooms)
    if (!ok(r.lo.x) || !ok(r.lo.y) || !ok(r.hi.x) || !ok(r.hi.y)) return false;
  for (const auto& c : o.corridors)
    if (!ok(c.rect.lo.x) || !ok(c.rect.lo.y) || !ok(c.rect.hi.x) ||
        !ok(c.rect.hi.y))
      return false;
  return true;
}

// One wall-placement pass over the corridors of one orientation. Distance
// checks and the "already seen" rule only consult guards placed in this
// pass; the wall discipline keeps cross-pass pairs at distance >= 3.
//
// The horizontal pass is the vertical pass on the polygon rotated 90 degrees
// clockwise: "up" becomes "left", so a horizontal corridor is handled by its
// right room, ordered bottom-to-top, with candidates on its lower wall.
std::vector<int> corridor_phase(const OfficeContext& oc, bool vertical) {
  const std::size_t nrooms = oc.office.rooms.size();
  std::vector<int> placed;  // vertex ids

  auto owner = [&](const OfficeContext::CorridorInfo& c) {
    return vertical ? c.low_room : c.high_room;
  };
  auto successor = [&](const OfficeContext::CorridorInfo& c) {
    return vertical ? c.high_room : c.low_room;
  };

  std::vector<std::vector<int>> above(nrooms);  // rooms greater than r
  for (const auto& c : oc.corridors)
    if (c.vertical == vertical)
      above[static_cast<std::size_t>(owner(c))].push_back(successor(c));

  std::vector<char> processed(nrooms, 0);
  const Rat three = 3;
  for (std::size_t step = 0; step < nrooms; ++step) {
    int pick = -1;
    for (std::size_t r = 0; r < nrooms; ++r) {
      if (processed[r]) continue;
      bool is_max = true;
      for (int up : above[r])
        if (!processed[static_cast<std::size_t>(up)]) {
          is_max = false;
          break;
        }
      if (is_max) {
        pick = static_cast<int>(r);
        break;
      }
    }
    if (pick < 0) throw std::logic_error("corridor phase: cyclic room order");
    processed[static_cast<std::size_t>(pick)] = 1;

    // Corridors extending "upward" (rotated frame) from the picked room.
    std::vector<int> cs;
    for (std::size_t ci = 0; ci < oc.corridors.size(); ++ci) {
      const auto& c = oc.corridors[ci];
      if (c.vertical == vertical && owner(c) == pick)
        cs.push_back(static_cast<int>(ci));
    }
    std::sort(cs.begin(), cs.end(), [&](int a, int b) {
      const Rect& ra = oc.corridors[static_cast<std::size_t>(a)].rect;
      const Rect& rb = oc.corridors[static_cast<std::size_t>(b)].rect;
      return vertical ? ra.lo.x < rb.lo.x : ra.lo.y < rb.lo.y;
    });

    for (int ci : cs) {
      const auto& c = oc.corridors[static_cast<std::size_t>(ci)];
      bool seen = false;
      for (int g : placed)
        if (covers_rect(oc.ctx.grid, oc.vpoint(g), c.rect)) {
          seen = true;
          break;
        }
      if (seen) continue;
      // Near candidate: on the low room's wall. Far candidate: across the
      // corridor. Vertical corridors use the left wall, horizontal the lower.
      int near_v = vertical ? c.v_bl : c.v_br;
      int far_v = vertical ? c.v_tl : c.v_bl;
      bool blocked = false;
      for (int g : placed)
        if (oc.vdist(g, near_v) < three) {
          blocked = true;
          break;
        }
      placed.push_back(blocked ? far_v : near_v);
    }
  }
  return placed;
}

}  // namespace

Solution wc3(const OfficeContext& oc) {
  if (!all_integer(oc.office))
    throw std::invalid_argument("wc3 requires integer coordinates");

  std::vector<int> guards = corridor_phase(oc, /*vertical=*/true);
  std::vector<int> phase2 = corridor_phase(oc, /*vertical=*/false);
  guards.insert(guards.end(), phase2.begin(), phase2.end());

  // Rooms not fully covered get a guard at their top-right corner.
  const auto& cells = oc.ctx.cells;
  const auto& grid = oc.ctx.grid;
  for (std::size_t r = 0; r < oc.office.rooms.size(); ++r) {
    const Rect& room = oc.office.rooms[r];
    int i0 = grid.x_index(room.lo.x), i1 = grid.x_index(room.hi.x);
    int j0 = grid.y_index(room.lo.y), j1 = grid.y_index(room.hi.y);
    bool covered = true;
    for (int j = j0; j < j1 && covered; ++j)
      for (int i = i0; i < i1 && covered; ++i) {
        int k = cells.cell_at[static_cast<std::size_t>(j) * (grid.nx - 1) + i];
        if (k < 0) continue;
        bool cell_cov = false;
        for (int g : guards)
          if (cells.covers(static_cast<std::size_t>(k), g)) {
            cell_cov = true;
            break;
          }
        if (!cell_cov) covered = false;
      }
    if (!covered) guards.push_back(oc.room_corners[r][3]);  // TR corner
  }

  Solution sol;
  for (int g : guards) sol.guards.push_back(oc.vpoint(g));
  sol.dispersion = realized_dispersion(oc.ctx.dist, sol.guards);
  return sol;
}

Solution wc3(const OfficePolygon& o) { return wc3(build_office_context(o)); }

Solution wc2(const OfficeContext& oc) {
  std::vector<int> guards;
  for (std::size_t r = 0; r < oc.office.rooms.size(); ++r) {
    const Rect& room = oc.office.rooms[r];
    // Walk clockwise from the bottom-left corner: up the left wall, then
    // right along the top wall, stopping before the top-right corner.
    std::vector<Point> walk;
    walk.push_back(Point{room.lo.x, room.lo.y});
    std::vector<Point> side;
    for (const auto& v : oc.ctx.vertices)
      if (v.x == room.lo.x && room.lo.y < v.y && v.y < room.hi.y)
        side.push_back(v);
    std::sort(side.begin(), side.end(),
              [](const Point& a, const Point& b) { return a.y < b.y; });
    walk.insert(walk.end(), side.begin(), side.end());
    walk.push_back(Point{room.lo.x, room.hi.y});
    side.clear();
    for (const auto& v : oc.ctx.vertices)
      if (v.y == room.hi.y && room.lo.x < v.x && v.x < room.hi.x)
        side.push_back(v);
    std::sort(side.begin(), side.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    walk.insert(walk.end(), side.begin(), side.end());
    // walk.back() would be the top-right corner; it never gets a guard.
    for (std::size_t k = 0; k < walk.size(); k += 2) {
      int id = oc.vertex(walk[k]);
      if (id < 0) throw std::logic_error("wc2: walk vertex missing");
      guards.push_back(id);
    }
  }
  std::sort(guards.begin(), guards.end());
  guards.erase(std::unique(guards.begin(), guards.end()), guards.end());

  Solution sol;
  for (int g : guards) sol.guards.push_back(oc.vpoint(g));
  sol.dispersion = realized_dispersion(oc.ctx.dist, sol.guards);
  return sol;
}

Solution wc2(const OfficePolygon& o) { return wc2(build_office_context(o)); }

}  // namespace dispgal
