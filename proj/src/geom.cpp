#include "dispgal/geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dispgal {

std::vector<Point> OrthoPolygon::all_vertices() const {
  std::vector<Point> v = outer;
  for (const auto& h : holes) v.insert(v.end(), h.begin(), h.end());
  return v;
}

std::size_t OrthoPolygon::vertex_count() const {
  std::size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return n;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : errors) os << "error: " << e << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

namespace {

struct Edge {
  Point a, b;
  bool horizontal;
};

std::vector<Edge> ring_edges(const std::vector<Point>& ring) {
  std::vector<Edge> es;
  const std::size_t k = ring.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % k];
    es.push_back(Edge{a, b, a.y == b.y});
  }
  return es;
}

std::vector<Edge> polygon_edges(const OrthoPolygon& p) {
  std::vector<Edge> es = ring_edges(p.outer);
  for (const auto& h : p.holes) {
    auto he = ring_edges(h);
    es.insert(es.end(), he.begin(), he.end());
  }
  return es;
}

// Closed intersection test for axis-parallel segments.
bool segments_intersect(const Edge& e, const Edge& f) {
  auto span = [](const Rat& a, const Rat& b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  if (e.horizontal && f.horizontal) {
    if (e.a.y != f.a.y) return false;
    auto [l1x, h1x] = span(e.a.x, e.b.x);
    auto [l2x, h2x] = span(f.a.x, f.b.x);
    return std::max(l1x, l2x) <= std::min(h1x, h2x);
  }
  if (!e.horizontal && !f.horizontal) {
    if (e.a.x != f.a.x) return false;
    auto [l1y, h1y] = span(e.a.y, e.b.y);
    auto [l2y, h2y] = span(f.a.y, f.b.y);
    return std::max(l1y, l2y) <= std::min(h1y, h2y);
  }
  const Edge& h = e.horizontal ? e : f;
  const Edge& v = e.horizontal ? f : e;
  auto [lx, hx] = span(h.a.x, h.b.x);
  auto [ly, hy] = span(v.a.y, v.b.y);
  return lx <= v.a.x && v.a.x <= hx && ly <= h.a.y && h.a.y <= hy;
}

Rat ring_signed_area2(const std::vector<Point>& ring) {
  Rat a = 0;
  const std::size_t k = ring.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % k];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

bool point_on_edge(const Edge& e, const Point& q) {
  if (e.horizontal) {
    if (q.y != e.a.y) return false;
    return std::min(e.a.x, e.b.x) <= q.x && q.x <= std::max(e.a.x, e.b.x);
  }
  if (q.x != e.a.x) return false;
  return std::min(e.a.y, e.b.y) <= q.y && q.y <= std::max(e.a.y, e.b.y);
}

// Even-odd parity over all rings; q must not lie on the boundary.
bool point_inside_parity(const std::vector<Edge>& edges, const Point& q) {
  int crossings = 0;
  for (const auto& e : edges) {
    if (e.horizontal) continue;
    if (e.a.x <= q.x) continue;
    Rat ylo = std::min(e.a.y, e.b.y), yhi = std::max(e.a.y, e.b.y);
    if (ylo <= q.y && q.y < yhi) ++crossings;
  }
  return (crossings & 1) != 0;
}

void check_ring(const std::vector<Point>& ring, const std::string& name,
                ValidationReport& rep) {
  const std::size_t k = ring.size();
  if (k < 4) {
    rep.errors.push_back(name + ": fewer than 4 vertices");
    return;
  }
  std::set<Point> seen(ring.begin(), ring.end());
  if (seen.size() != k) rep.errors.push_back(name + ": repeated vertex");
  auto es = ring_edges(ring);
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = es[i];
    if (e.a == e.b) {
      rep.errors.push_back(name + ": zero-length edge");
      return;
    }
    if (e.a.x != e.b.x && e.a.y != e.b.y) {
      rep.errors.push_back(name + ": non-axis-parallel edge");
      return;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (es[i].horizontal == es[(i + 1) % k].horizontal) {
      rep.errors.push_back(name + ": consecutive edges do not alternate");
      return;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) continue;
      if (segments_intersect(es[i], es[j])) {
        rep.errors.push_back(name + ": self-intersection");
        return;
      }
    }
  }
}

bool rings_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  auto ea = ring_edges(a), eb = ring_edges(b);
  for (const auto& x : ea)
    for (const auto& y : eb)
      if (segments_intersect(x, y)) return false;
  return true;
}

}  // namespace

ValidationReport validate_ortho(const OrthoPolygon& p) {
  ValidationReport rep;
  check_ring(p.outer, "outer ring", rep);
  for (std::size_t h = 0; h < p.holes.size(); ++h)
    check_ring(p.holes[h], "hole " + std::to_string(h), rep);
  if (!rep.ok()) return rep;

  if (ring_signed_area2(p.outer) <= 0)
    rep.errors.push_back("outer ring not counter-clockwise");
  for (std::size_t h = 0; h < p.holes.size(); ++h)
    if (ring_signed_area2(p.holes[h]) >= 0)
      rep.errors.push_back("hole " + std::to_string(h) + " not clockwise");

  auto outer_edges = ring_edges(p.outer);
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    if (!rings_disjoint(p.outer, p.holes[h])) {
      rep.errors.push_back("hole " + std::to_string(h) + " touches outer ring");
      continue;
    }
    for (const auto& v : p.holes[h]) {
      if (!point_inside_parity(outer_edges, v)) {
        rep.errors.push_back("hole " + std::to_string(h) + " outside outer ring");
        break;
      }
    }
  }
  for (std::size_t h = 0; h < p.holes.size(); ++h)
    for (std::size_t g = h + 1; g < p.holes.size(); ++g)
      if (!rings_disjoint(p.holes[h], p.holes[g]))
        rep.errors.push_back("holes " + std::to_string(h) + " and " +
                             std::to_string(g) + " intersect");
  return rep;
}

bool contains_point(const OrthoPolygon& p, const Point& q) {
  auto edges = polygon_edges(p);
  for (const auto& e : edges)
    if (point_on_edge(e, q)) return true;
  return point_inside_parity(edges, q);
}

bool contains_rect(const OrthoPolygon& p, const Rect& r) {
  if (r.lo.x > r.hi.x || r.lo.y > r.hi.y) return false;
  std::set<Rat> xset{r.lo.x, r.hi.x}, yset{r.lo.y, r.hi.y};
  for (const auto& v : p.all_vertices()) {
    if (r.lo.x < v.x && v.x < r.hi.x) xset.insert(v.x);
    if (r.lo.y < v.y && v.y < r.hi.y) yset.insert(v.y);
  }
  std::vector<Rat> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
  auto mids = [](const std::vector<Rat>& cs) {
    std::vector<Rat> m;
    if (cs.size() == 1) {
      m.push_back(cs[0]);
      return m;
    }
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
      m.push_back((cs[i] + cs[i + 1]) / 2);
    return m;
  };
  for (const Rat& mx : mids(xs))
    for (const Rat& my : mids(ys))
      if (!contains_point(p, Point{mx, my})) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Office validation

namespace {

// Which side of room `room` the corridor attaches to, if any.
// Returns 0 none, 1 room-below (corridor on top edge), 2 room-above,
// 3 room-left (corridor on right edge), 4 room-right.
int attach_side(const Rect& room, const Rect& c) {
  bool x_strict = room.lo.x < c.lo.x && c.hi.x < room.hi.x;
  bool y_strict = room.lo.y < c.lo.y && c.hi.y < room.hi.y;
  if (x_strict && room.hi.y == c.lo.y) return 1;
  if (x_strict && room.lo.y == c.hi.y) return 2;
  if (y_strict && room.hi.x == c.lo.x) return 3;
  if (y_strict && room.lo.x == c.hi.x) return 4;
  return 0;
}

}  // namespace

ValidationReport validate_office(OfficePolygon& o) {
  ValidationReport rep;
  for (std::size_t i = 0; i < o.rooms.size(); ++i)
    if (!o.rooms[i].valid())
      rep.errors.push_back("room " + std::to_string(i) + " has no area");
  for (std::size_t i = 0; i < o.corridors.size(); ++i)
    if (!o.corridors[i].rect.valid())
      rep.errors.push_back("corridor " + std::to_string(i) + " has no area");
  if (!rep.ok()) return rep;
  if (o.rooms.empty()) {
    rep.errors.push_back("no rooms");
    return rep;
  }

  for (std::size_t i = 0; i < o.rooms.size(); ++i)
    for (std::size_t j = i + 1; j < o.rooms.size(); ++j)
      if (o.rooms[i].touches(o.rooms[j]))
        rep.errors.push_back("rooms " + std::to_string(i) + " and " +
                             std::to_string(j) + " not disjoint");

  for (std::size_t i = 0; i < o.corridors.size(); ++i) {
    Corridor& c = o.corridors[i];
    const std::string cn = "corridor " + std::to_string(i);
    if (c.room_a < 0 || c.room_b < 0 ||
        c.room_a >= static_cast<int>(o.rooms.size()) ||
        c.room_b >= static_cast<int>(o.rooms.size()) || c.room_a == c.room_b) {
      rep.errors.push_back(cn + ": must connect exactly two distinct rooms");
      continue;
    }
    int sa = attach_side(o.rooms[c.room_a], c.rect);
    int sb = attach_side(o.rooms[c.room_b], c.rect);
    if (sa == 1 && sb == 2) {
      c.orientation = Axis::vertical;
    } else if (sa == 2 && sb == 1) {
      c.orientation = Axis::vertical;
    } else if (sa == 3 && sb == 4) {
      c.orientation = Axis::horizontal;
    } else if (sa == 4 && sb == 3) {
      c.orientation = Axis::horizontal;
    } else {
      rep.errors.push_back(
          cn + ": sides not strictly contained in the edges of its two rooms");
      continue;
    }
    for (std::size_t r = 0; r < o.rooms.size(); ++r) {
      if (static_cast<int>(r) == c.room_a || static_cast<int>(r) == c.room_b)
        continue;
      if (c.rect.touches(o.rooms[r]))
        rep.errors.push_back(cn + " touches room " + std::to_string(r));
    }
  }
  for (std::size_t i = 0; i < o.corridors.size(); ++i)
    for (std::size_t j = i + 1; j < o.corridors.size(); ++j)
      if (o.corridors[i].rect.touches(o.corridors[j].rect))
        rep.errors.push_back("corridors " + std::to_string(i) + " and " +
                             std::to_string(j) + " not disjoint");

  // Connectivity over the room/corridor incidence graph.
  if (rep.ok()) {
    std::vector<int> comp(o.rooms.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int r = stack.back();
      stack.pop_back();
      for (const auto& c : o.corridors) {
        int other = -1;
        if (c.room_a == r) other = c.room_b;
        if (c.room_b == r) other = c.room_a;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = 0;
          stack.push_back(other);
        }
      }
    }
    for (std::size_t r = 0; r < o.rooms.size(); ++r)
      if (comp[r] < 0) {
        rep.errors.push_back("union of rooms and corridors is disconnected");
        break;
      }
  }

  // Vertex spacing below 1 is legal but voids the worst-case guarantees.
  if (rep.ok()) {
    std::vector<Point> corners;
    for (const auto& r : o.rooms)
      for (const auto& p : r.corners()) corners.push_back(p);
    for (const auto& c : o.corridors)
      for (const auto& p : c.rect.corners()) corners.push_back(p);
    bool warned = false;
    for (std::size_t i = 0; i < corners.size() && !warned; ++i)
      for (std::size_t j = i + 1; j < corners.size() && !warned; ++j) {
        Rat d = l1(corners[i], corners[j]);
        if (d > 0 && d < 1) {
          rep.warnings.push_back(
              "vertex pair closer than 1 (worst-case bounds assume spacing >= 1)");
          warned = true;
        }
      }
  }
  return rep;
}

ValidationReport validate_office(const OfficePolygon& o) {
  OfficePolygon copy = o;
  return validate_office(copy);
}

bool corridor_vertical(const Rect& corridor, const std::vector<Rect>& rooms,
                       int room_a, int room_b) {
  int sa = attach_side(rooms[room_a], corridor);
  (void)room_b;
  return sa == 1 || sa == 2;
}

// ---------------------------------------------------------------------------
// Rectangle-union boundary trace

OrthoPolygon rect_union_polygon(const std::vector<Rect>& rects) {
  if (rects.empty()) throw std::invalid_argument("empty rectangle set");
  std::set<Rat> xset, yset;
  for (const auto& r : rects) {
    if (!r.valid()) throw std::invalid_argument("degenerate rectangle in union");
    xset.insert(r.lo.x);
    xset.insert(r.hi.x);
    yset.insert(r.lo.y);
    yset.insert(r.hi.y);
  }
  std::vector<Rat> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
  const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
  auto xi = [&](const Rat& v) {
    return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto yi = [&](const Rat& v) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
  };
  std::vector<uint8_t> occ(static_cast<std::size_t>(nx - 1) * (ny - 1), 0);
  auto cell = [&](int i, int j) -> uint8_t& {
    return occ[static_cast<std::size_t>(j) * (nx - 1) + i];
  };
  for (const auto& r : rects) {
    int i0 = xi(r.lo.x), i1 = xi(r.hi.x), j0 = yi(r.lo.y), j1 = yi(r.hi.y);
    for (int j = j0; j < j1; ++j)
      for (int i = i0; i < i1; ++i) cell(i, j) = 1;
  }
  auto inside = [&](int i, int j) {
    if (i < 0 || j < 0 || i >= nx - 1 || j >= ny - 1) return false;
    return cell(i, j) != 0;
  };

  // Directed boundary edges with the interior on the left.
  // Node id = j * nx + i for grid point (xs[i], ys[j]).
  std::map<int, std::vector<int>> out;  // node -> list of successor nodes
  auto node = [&](int i, int j) { return j * nx + i; };
  for (int j = 0; j <= ny - 1; ++j)
    for (int i = 0; i < nx - 1; ++i) {
      bool below = inside(i, j - 1), above = inside(i, j);
      if (below == above) continue;
      if (below)
        out[node(i + 1, j)].push_back(node(i, j));  // walk -x
      else
        out[node(i, j)].push_back(node(i + 1, j));  // walk +x
    }
  for (int i = 0; i <= nx - 1; ++i)
    for (int j = 0; j < ny - 1; ++j) {
      bool left = inside(i - 1, j), right = inside(i, j);
      if (left == right) continue;
      if (left)
        out[node(i, j)].push_back(node(i, j + 1));  // walk +y
      else
        out[node(i, j + 1)].push_back(node(i, j));  // walk -y
    }
  for (const auto& [n, succ] : out)
    if (succ.size() > 1)
      throw std::invalid_argument("rectangle union touches itself at a point");

  std::set<int> visited;
  std::vector<std::vector<Point>> rings;
  for (const auto& [start, succ] : out) {
    if (visited.count(start)) continue;
    std::vector<int> loop;
    int cur = start;
    do {
      visited.insert(cur);
      loop.push_back(cur);
      auto it = out.find(cur);
      if (it == out.end() || it->second.empty())
        throw std::invalid_argument("open boundary in rectangle union");
      cur = it->second.front();
    } while (cur != start);
    // Drop collinear intermediate nodes.
    std::vector<Point> ring;
    const std::size_t k = loop.size();
    for (std::size_t t = 0; t < k; ++t) {
      int prev = loop[(t + k - 1) % k], here = loop[t], next = loop[(t + 1) % k];
      int pi = prev % nx, pj = prev / nx;
      int hi_ = here % nx, hj = here / nx;
      int ni = next % nx, nj = next / nx;
      bool straight = (pi == hi_ && hi_ == ni) || (pj == hj && hj == nj);
      if (!straight) ring.push_back(Point{xs[hi_], ys[hj]});
    }
    // Start each ring at its smallest vertex for determinism.
    auto mn = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), mn, ring.end());
    rings.push_back(std::move(ring));
  }

  OrthoPolygon poly;
  int outers = 0;
  for (auto& ring : rings) {
    if (ring_signed_area2(ring) > 0) {
      ++outers;
      poly.outer = ring;
    } else {
      poly.holes.push_back(ring);
    }
  }
  if (outers != 1)
    throw std::invalid_argument("rectangle union is disconnected");
  std::sort(poly.holes.begin(), poly.holes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return poly;
}

OrthoPolygon office_to_polygon(const OfficePolygon& o) {
  ValidationReport rep = validate_office(o);
  if (!rep.ok())
    throw std::invalid_argument("invalid office polygon:\n" + rep.to_string());
  std::vector<Rect> rects = o.rooms;
  for (const auto& c : o.corridors) rects.push_back(c.rect);
  return rect_union_polygon(rects);
}

}  // namespace dispgal
