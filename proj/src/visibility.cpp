#include "dispgal/visibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace dispgal {

bool sees(const PolyGrid& g, const Point& a, const Point& b) {
  int ia = g.x_index(a.x), ib = g.x_index(b.x);
  int ja = g.y_index(a.y), jb = g.y_index(b.y);
  if (ia < 0 || ib < 0 || ja < 0 || jb < 0)
    throw std::invalid_argument("sees: point not on the coordinate grid");
  return g.rect_inside(std::min(ia, ib), std::max(ia, ib), std::min(ja, jb),
                       std::max(ja, jb));
}

bool sees(const OrthoPolygon& p, const Point& a, const Point& b) {
  return contains_rect(p, rect_between(a, b));
}

bool covers_rect(const OrthoPolygon& p, const Point& g, const Rect& r) {
  for (const auto& c : r.corners())
    if (!sees(p, g, c)) return false;
  return true;
}

bool covers_rect(const PolyGrid& grid, const Point& g, const Rect& r) {
  for (const auto& c : r.corners())
    if (!sees(grid, g, c)) return false;
  return true;
}

namespace {

struct Span {
  Rat lo, hi, at;  // segment [lo, hi] on the line {axis = at}
};

enum class EdgeClass { ceil, floor, wall_left, wall_right };

struct ClassifiedEdge {
  EdgeClass cls;
  Span s;
};

void classify_ring(const std::vector<Point>& ring,
                   std::vector<ClassifiedEdge>& out) {
  const std::size_t k = ring.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % k];
    // Interior is on the left of the walking direction (outer CCW, holes CW).
    if (a.y == b.y) {
      Span s{std::min(a.x, b.x), std::max(a.x, b.x), a.y};
      out.push_back({b.x > a.x ? EdgeClass::floor : EdgeClass::ceil, s});
    } else {
      Span s{std::min(a.y, b.y), std::max(a.y, b.y), a.x};
      out.push_back({b.y > a.y ? EdgeClass::wall_left : EdgeClass::wall_right, s});
    }
  }
}

// Within one quadrant, mapped into up-right space by sign flips.
std::vector<Point> quadrant_frontier(const std::vector<ClassifiedEdge>& edges,
                                     const Point& q, int sx, int sy,
                                     const Rat& ray_x_limit,
                                     const Rat& ray_y_limit) {
  const Rat qx = sx * q.x, qy = sy * q.y;
  std::vector<Point> cand;
  const EdgeClass ceil_cls = (sy > 0) ? EdgeClass::ceil : EdgeClass::floor;
  const EdgeClass wall_cls = (sx > 0) ? EdgeClass::wall_left : EdgeClass::wall_right;
  for (const auto& e : edges) {
    if (e.cls == ceil_cls) {
      Rat y = sy * e.s.at;
      Rat xa = std::min(Rat(sx * e.s.lo), Rat(sx * e.s.hi));
      Rat xb = std::max(Rat(sx * e.s.lo), Rat(sx * e.s.hi));
      if (y >= qy && xb > qx) cand.push_back(Point{std::max(xa, qx), y});
    } else if (e.cls == wall_cls) {
      Rat x = sx * e.s.at;
      Rat ya = std::min(Rat(sy * e.s.lo), Rat(sy * e.s.hi));
      Rat yb = std::max(Rat(sy * e.s.lo), Rat(sy * e.s.hi));
      if (x >= qx && yb > qy) cand.push_back(Point{x, std::max(ya, qy)});
    }
  }
  // Ray limits along the two axes (already in quadrant space) act as the
  // nearest-blocker sentinels.
  cand.push_back(Point{ray_x_limit, qy});
  cand.push_back(Point{qx, ray_y_limit});

  std::sort(cand.begin(), cand.end());
  std::vector<Point> frontier;
  for (const auto& c : cand) {
    while (!frontier.empty() && frontier.back().y >= c.y &&
           frontier.back().x >= c.x)
      frontier.pop_back();
    if (frontier.empty() || c.y < frontier.back().y) frontier.push_back(c);
  }
  return frontier;
}

}  // namespace

VisPolygon rvis_polygon(const OrthoPolygon& p, const PolyGrid& grid,
                        const Point& q) {
  int qi = grid.x_index(q.x), qj = grid.y_index(q.y);
  if (qi < 0 || qj < 0)
    throw std::invalid_argument("rvis_polygon: query point not on the grid");
  if (!grid.node_inside(qi, qj))
    throw std::invalid_argument("rvis_polygon: query point outside polygon");

  std::vector<ClassifiedEdge> edges;
  classify_ring(p.outer, edges);
  for (const auto& h : p.holes) classify_ring(h, edges);

  // Visibility limits along the four axis rays from q.
  int i = qi;
  while (i + 1 < grid.nx && grid.hedge_inside(i, qj)) ++i;
  Rat right = grid.xs[i];
  i = qi;
  while (i - 1 >= 0 && grid.hedge_inside(i - 1, qj)) --i;
  Rat left = grid.xs[i];
  int j = qj;
  while (j + 1 < grid.ny && grid.vedge_inside(qi, j)) ++j;
  Rat up = grid.ys[j];
  j = qj;
  while (j - 1 >= 0 && grid.vedge_inside(qi, j - 1)) --j;
  Rat down = grid.ys[j];

  VisPolygon vis;
  vis.origin = q;
  vis.reach_left = left;
  vis.reach_right = right;
  vis.reach_down = down;
  vis.reach_up = up;
  const int SX[4] = {1, -1, -1, 1};
  const int SY[4] = {1, 1, -1, -1};
  // Ray limits already mapped into each quadrant's up-right space.
  const Rat RX[4] = {right, -left, -left, right};
  const Rat RY[4] = {up, up, -down, -down};
  std::vector<Rect> rects;
  for (int k = 0; k < 4; ++k) {
    auto frontier = quadrant_frontier(edges, q, SX[k], SY[k], RX[k], RY[k]);
    const Rat qx = SX[k] * q.x, qy = SY[k] * q.y;
    for (std::size_t t = 0; t + 1 < frontier.size(); ++t) {
      const Point& a = frontier[t];
      const Point& b = frontier[t + 1];
      if (a.y > qy && b.x > a.x) {
        Point c0{SX[k] * a.x, SY[k] * qy};
        Point c1{SX[k] * b.x, SY[k] * a.y};
        rects.push_back(rect_between(c0, c1));
      }
    }
    // Report frontiers in original coordinates.
    auto& fr = vis.frontiers[k];
    for (const auto& f : frontier) fr.push_back(Point{SX[k] * f.x, SY[k] * f.y});
  }
  if (rects.empty())
    throw std::logic_error("rvis_polygon: empty visibility region");
  vis.region = rect_union_polygon(rects);
  return vis;
}

bool vis_contains(const VisPolygon& vis, const Point& p) {
  if (p.x == vis.origin.x && vis.reach_down <= p.y && p.y <= vis.reach_up)
    return true;
  if (p.y == vis.origin.y && vis.reach_left <= p.x && p.x <= vis.reach_right)
    return true;
  return contains_point(vis.region, p);
}

VisPolygon rvis_polygon(const OrthoPolygon& p, const Point& q) {
  if (!contains_point(p, q))
    throw std::invalid_argument("rvis_polygon: query point outside polygon");
  PolyGrid g = build_grid(p, {q});
  return rvis_polygon(p, g, q);
}

}  // namespace dispgal
