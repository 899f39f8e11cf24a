#include <doctest.h>

#include <map>
#include <set>
#include <queue>

#include "dispgal/geodesic.hpp"
#include "dispgal/instances.hpp"
#include "dispgal/office.hpp"
#include "dispgal/dp.hpp"
#include "test_util.hpp"

using namespace dispgal;
using namespace dispgal::testutil;

namespace {

// Unit-grid breadth-first oracle for integer polygons: nodes are integer
// points in the closed region, edges are unit segments inside it.
std::map<std::pair<long, long>, long> bfs_oracle(const OrthoPolygon& p,
                                                 const Point& src) {
  long minx = rat_to_int64(p.outer[0].x), maxx = minx;
  long miny = rat_to_int64(p.outer[0].y), maxy = miny;
  for (const auto& v : p.all_vertices()) {
    minx = std::min(minx, rat_to_int64(v.x));
    maxx = std::max(maxx, rat_to_int64(v.x));
    miny = std::min(miny, rat_to_int64(v.y));
    maxy = std::max(maxy, rat_to_int64(v.y));
  }
  auto inside = [&](long x, long y) {
    return contains_point(p, pt(x, y));
  };
  auto edge_ok = [&](long x1, long y1, long x2, long y2) {
    return contains_rect(p, rect_between(pt(x1, y1), pt(x2, y2)));
  };
  std::map<std::pair<long, long>, long> dist;
  std::queue<std::pair<long, long>> q;
  std::pair<long, long> s{rat_to_int64(src.x), rat_to_int64(src.y)};
  dist[s] = 0;
  q.push(s);
  const long dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    for (int k = 0; k < 4; ++k) {
      long nx = x + dx[k], ny = y + dy[k];
      if (nx < minx || nx > maxx || ny < miny || ny > maxy) continue;
      if (dist.count({nx, ny})) continue;
      if (!inside(nx, ny) || !edge_ok(x, y, nx, ny)) continue;
      dist[{nx, ny}] = dist[{x, y}] + 1;
      q.push({nx, ny});
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("build_hanan: node and edge counts") {
  HananGraph sq = build_hanan(unit_square());
  CHECK(sq.nodes.size() == 4);
  CHECK(sq.edge_count == 4);
  HananGraph l = build_hanan(l_shape());
  CHECK(l.nodes.size() == 8);  // the 3x3 grid minus the notch corner (2,2)
}

TEST_CASE("geodesic_dist: staircase distances") {
  HananGraph sq = build_hanan(unit_square());
  CHECK(geodesic_dist(sq, pt(0, 0), pt(1, 1)) == 2);
  HananGraph l = build_hanan(l_shape());
  CHECK(geodesic_dist(l, pt(2, 0), pt(0, 2)) == 4);
  HananGraph u = build_hanan(u_shape());
  CHECK(geodesic_dist(u, pt(1, 3), pt(2, 3)) == 5);
}

TEST_CASE("all_pairs matrix: unit square and L-shape") {
  DistanceMatrix sq = all_pairs_vertex_dist(unit_square());
  std::set<Rat> values;
  for (const auto& row : sq.d)
    for (const auto& v : row) values.insert(v);
  CHECK(values == std::set<Rat>{Rat(0), Rat(1), Rat(2)});

  DistanceMatrix l = all_pairs_vertex_dist(l_shape());
  Rat mx = 0;
  for (const auto& row : l.d)
    for (const auto& v : row) mx = std::max(mx, v);
  CHECK(mx == 4);
  int a = l.index_of(pt(2, 0)), b = l.index_of(pt(0, 2));
  CHECK(l.d[a][b] == 4);
}

TEST_CASE("distance matrix has metric structure and the L1 lower bound") {
  for (std::uint64_t seed : {6u, 21u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 5;
    cfg.allow_holes = seed % 2 == 0;
    OrthoPolygon p = office_to_polygon(gen_random_office(cfg));
    DistanceMatrix m = all_pairs_vertex_dist(p);
    const std::size_t n = m.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(m.d[i][i] == 0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(m.d[i][j] == m.d[j][i]);
        CHECK(m.d[i][j] >= l1(m.vertices[i], m.vertices[j]));
        for (std::size_t k = 0; k < n; ++k)
          CHECK(m.d[i][j] <= m.d[i][k] + m.d[k][j]);
      }
    }
  }
}

TEST_CASE("geodesics match the unit-grid breadth-first oracle") {
  std::vector<OrthoPolygon> polys{unit_square(), l_shape(), u_shape(),
                                  holed_square(),
                                  office_to_polygon(two_room_office())};
  for (const auto& p : polys) {
    DistanceMatrix m = all_pairs_vertex_dist(p);
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
      auto oracle = bfs_oracle(p, m.vertices[i]);
      for (std::size_t j = 0; j < m.vertices.size(); ++j) {
        auto key = std::make_pair(rat_to_int64(m.vertices[j].x),
                                  rat_to_int64(m.vertices[j].y));
        REQUIRE(oracle.count(key) == 1);
        CHECK(m.d[i][j] == Rat(oracle[key]));
      }
    }
  }
}

TEST_CASE("snapping: arbitrary rational points become nodes via extra coords") {
  OrthoPolygon sq = unit_square();
  Point mid{rat(1, 2), rat(1, 2)};
  HananGraph g = build_hanan(sq, {mid});
  CHECK(geodesic_dist(g, pt(0, 0), mid) == 1);
}

TEST_CASE("gate vertices carry cross-branch shortest paths") {
  // For every corridor of an independent office and vertices u inside /
  // w outside the branch behind it, some shortest path runs through a gate.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 4;
    cfg.size_lo = 4;
    cfg.size_hi = 9;
    OfficePolygon o;
    try {
      o = gen_random_office(cfg);
    } catch (...) {
      continue;
    }
    OfficeContext oc = build_office_context(o);
    if (!check_independent(oc)) continue;
    const auto& D = oc.ctx.dist;
    for (const auto& c : oc.corridors) {
      // The branch behind the corridor seen from its high side: everything
      // reachable from low_room without crossing this corridor.
      std::vector<char> in_branch(oc.office.rooms.size(), 0);
      std::vector<int> stack{c.low_room};
      in_branch[static_cast<std::size_t>(c.low_room)] = 1;
      while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (const auto& c2 : oc.corridors) {
          if (&c2 == &c) continue;
          int other = -1;
          if (c2.low_room == r) other = c2.high_room;
          if (c2.high_room == r) other = c2.low_room;
          if (other >= 0 && !in_branch[static_cast<std::size_t>(other)]) {
            in_branch[static_cast<std::size_t>(other)] = 1;
            stack.push_back(other);
          }
        }
      }
      int g1, g2;
      if (c.vertical) {
        g1 = c.v_tl;
        g2 = c.v_tr;
      } else {
        g1 = c.v_br;
        g2 = c.v_tr;
      }
      // u: a corner of a branch room; w: a corner of a non-branch room.
      for (std::size_t ru = 0; ru < oc.office.rooms.size(); ++ru) {
        if (!in_branch[ru]) continue;
        for (std::size_t rw = 0; rw < oc.office.rooms.size(); ++rw) {
          if (in_branch[rw]) continue;
          int u = oc.room_corners[ru][0];
          int w = oc.room_corners[rw][3];
          Rat via = std::min(Rat(D.d[u][g1] + D.d[g1][w]),
                             Rat(D.d[u][g2] + D.d[g2][w]));
          CHECK(D.d[u][w] == via);
        }
      }
    }
  }
}
