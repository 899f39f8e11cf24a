#include <doctest.h>

#include <random>

#include "dispgal/geom.hpp"
#include "dispgal/grid.hpp"
#include "dispgal/instances.hpp"
#include "test_util.hpp"

using namespace dispgal;
using namespace dispgal::testutil;

TEST_CASE("rationals parse and print exactly") {
  CHECK(rat_str(*rat_parse("5/3")) == "5/3");
  CHECK(rat_str(*rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(*rat_parse("7")) == "7");
  CHECK(!rat_parse("1/0").has_value());
  CHECK(!rat_parse("a").has_value());
  CHECK(rat(1, 3) + rat(2, 5) == rat(11, 15));
}

TEST_CASE("validate_ortho accepts the unit square") {
  CHECK(validate_ortho(unit_square()).ok());
}

TEST_CASE("validate_ortho rejects a triangle") {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(1, 0), pt(0, 1)};
  auto rep = validate_ortho(p);
  CHECK(!rep.ok());
}

TEST_CASE("validate_ortho rejects a counter-clockwise hole") {
  OrthoPolygon p = holed_square();
  std::reverse(p.holes[0].begin(), p.holes[0].end());
  auto rep = validate_ortho(p);
  CHECK(!rep.ok());
  bool mentions_hole = false;
  for (const auto& e : rep.errors)
    if (e.find("hole") != std::string::npos) mentions_hole = true;
  CHECK(mentions_hole);
}

TEST_CASE("validate_ortho catches self-intersections and wrong outer orientation") {
  OrthoPolygon p;
  p.outer = {pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)};  // clockwise
  CHECK(!validate_ortho(p).ok());
  OrthoPolygon q;
  q.outer = {pt(0, 0), pt(2, 0), pt(2, 2), pt(1, 2),
             pt(1, -1), pt(3, -1), pt(3, 3), pt(0, 3)};
  CHECK(!validate_ortho(q).ok());
}

TEST_CASE("validate_office accepts the canonical two-room office") {
  CHECK(validate_office(two_room_office()).ok());
}

TEST_CASE("validate_office rejects a corridor spanning a full room edge") {
  OfficePolygon o;
  o.rooms.push_back(Rect{pt(0, 0), pt(3, 3)});
  o.rooms.push_back(Rect{pt(4, 0), pt(7, 3)});
  Corridor c;
  c.rect = Rect{pt(3, 0), pt(4, 3)};  // as tall as the rooms
  c.room_a = 0;
  c.room_b = 1;
  o.corridors.push_back(c);
  CHECK(!validate_office(o).ok());
}

TEST_CASE("validate_office rejects a corridor incident to one room") {
  OfficePolygon o;
  o.rooms.push_back(Rect{pt(0, 0), pt(3, 3)});
  Corridor c;
  c.rect = Rect{pt(3, 1), pt(4, 2)};
  c.room_a = 0;
  c.room_b = 0;
  o.corridors.push_back(c);
  CHECK(!validate_office(o).ok());
}

TEST_CASE("validate_office warns below unit vertex spacing") {
  OfficePolygon o = two_room_office();
  // Shrink the corridor to height 1/2: legal geometry, voided guarantees.
  o.corridors[0].rect = Rect{Point{Rat(3), rat(3, 2)}, Point{Rat(4), Rat(2)}};
  auto rep = validate_office(o);
  CHECK(rep.ok());
  CHECK(!rep.warnings.empty());
}

TEST_CASE("office_to_polygon: single room is the identity") {
  OfficePolygon o;
  o.rooms.push_back(Rect{pt(0, 0), pt(3, 3)});
  OrthoPolygon p = office_to_polygon(o);
  CHECK(p.outer.size() == 4);
  CHECK(p.holes.empty());
}

TEST_CASE("office_to_polygon: two rooms and a corridor give 12 vertices") {
  OrthoPolygon p = office_to_polygon(two_room_office());
  CHECK(p.outer.size() == 12);
  CHECK(p.holes.empty());
  CHECK(validate_ortho(p).ok());
}

TEST_CASE("office_to_polygon: a 2x2 room cycle produces exactly one hole") {
  OfficePolygon o;
  o.rooms.push_back(Rect{pt(0, 0), pt(3, 3)});
  o.rooms.push_back(Rect{pt(5, 0), pt(8, 3)});
  o.rooms.push_back(Rect{pt(0, 5), pt(3, 8)});
  o.rooms.push_back(Rect{pt(5, 5), pt(8, 8)});
  auto corr = [](Rect r, int a, int b) {
    Corridor c;
    c.rect = r;
    c.room_a = a;
    c.room_b = b;
    return c;
  };
  o.corridors.push_back(corr(Rect{pt(3, 1), pt(5, 2)}, 0, 1));
  o.corridors.push_back(corr(Rect{pt(1, 3), pt(2, 5)}, 0, 2));
  o.corridors.push_back(corr(Rect{pt(6, 3), pt(7, 5)}, 1, 3));
  o.corridors.push_back(corr(Rect{pt(3, 6), pt(5, 7)}, 2, 3));
  OrthoPolygon p = office_to_polygon(o);
  CHECK(validate_ortho(p).ok());
  CHECK(p.holes.size() == 1);
}

TEST_CASE("office_to_polygon agrees with direct rectangle membership") {
  // Sampling oracle: a point lies in the compiled polygon iff it lies in
  // some room or corridor rectangle.
  for (std::uint64_t seed : {3u, 11u, 19u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 6;
    cfg.allow_holes = seed % 2 == 1;
    OfficePolygon o = gen_random_office(cfg);
    OrthoPolygon p = office_to_polygon(o);
    std::vector<Rect> rects = o.rooms;
    for (const auto& c : o.corridors) rects.push_back(c.rect);
    Rat minx = rects[0].lo.x, maxx = rects[0].hi.x;
    Rat miny = rects[0].lo.y, maxy = rects[0].hi.y;
    for (const auto& r : rects) {
      minx = std::min(minx, r.lo.x);
      maxx = std::max(maxx, r.hi.x);
      miny = std::min(miny, r.lo.y);
      maxy = std::max(maxy, r.hi.y);
    }
    for (Rat x = minx - rat(1, 2); x <= maxx + 1; x += rat(3, 4))
      for (Rat y = miny - rat(1, 2); y <= maxy + 1; y += rat(3, 4)) {
        Point q{x, y};
        bool in_rects = false;
        for (const auto& r : rects)
          if (r.contains(q)) in_rects = true;
        CHECK(contains_point(p, q) == in_rects);
      }
  }
}

TEST_CASE("office_to_polygon keeps integer coordinates integral") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.n_rooms = 7;
  OrthoPolygon p = office_to_polygon(gen_random_office(cfg));
  for (const auto& v : p.all_vertices()) {
    CHECK(v.x.get_den() == 1);
    CHECK(v.y.get_den() == 1);
  }
}

TEST_CASE("contains_point closed semantics") {
  OrthoPolygon sq = unit_square();
  CHECK(contains_point(sq, Point{rat(1, 2), rat(1, 2)}));
  CHECK(contains_point(sq, pt(1, 1)));  // boundary counts
  CHECK(!contains_point(sq, pt(2, 0)));
}

TEST_CASE("contains_rect on the L-shape and around holes") {
  OrthoPolygon l = l_shape();
  CHECK(contains_rect(l, Rect{pt(0, 0), pt(2, 1)}));
  CHECK(!contains_rect(l, Rect{pt(0, 0), pt(2, 2)}));
  OrthoPolygon h = holed_square();
  CHECK(!contains_rect(h, Rect{Point{rat(1, 2), rat(1, 2)},
                               Point{rat(5, 2), rat(5, 2)}}));
  CHECK(contains_rect(h, Rect{pt(0, 0), pt(3, 1)}));
  // Degenerate rectangles are segments; boundary segments count as inside.
  CHECK(contains_rect(h, Rect{pt(1, 1), pt(2, 1)}));
  CHECK(!contains_rect(h, Rect{Point{rat(3, 2), rat(3, 2)},
                               Point{rat(3, 2), rat(3, 2)}}));
}

TEST_CASE("contains_rect matches the grid-cell characterization") {
  // r inside <=> r within the hull and every overlapping cell is interior.
  for (std::uint64_t seed : {5u, 9u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 4;
    OrthoPolygon p = office_to_polygon(gen_random_office(cfg));
    PolyGrid g = build_grid(p);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 60; ++t) {
      long x1 = static_cast<long>(rng() % 20) - 5;
      long y1 = static_cast<long>(rng() % 20) - 5;
      long w = 1 + static_cast<long>(rng() % 6), h = 1 + static_cast<long>(rng() % 6);
      Rect r{pt(x1, y1), pt(x1 + w, y1 + h)};
      bool cells_ok = true;
      for (int i = 0; i + 1 < g.nx; ++i)
        for (int j = 0; j + 1 < g.ny; ++j) {
          Rect cell = g.cell_rect(i, j);
          if (cell.overlaps(r) && !g.cell_inside(i, j)) cells_ok = false;
        }
      bool hull = g.xs.front() <= r.lo.x && r.hi.x <= g.xs.back() &&
                  g.ys.front() <= r.lo.y && r.hi.y <= g.ys.back();
      CHECK(contains_rect(p, r) == (cells_ok && hull));
    }
  }
}

TEST_CASE("rect_union_polygon rejects disconnected input") {
  CHECK_THROWS_AS(rect_union_polygon({Rect{pt(0, 0), pt(1, 1)},
                                      Rect{pt(3, 3), pt(4, 4)}}),
                  std::invalid_argument);
}
