#include "dispgal/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace dispgal {

namespace {

// lcm of coordinate denominators, or 0 when scaling would overflow int64.
std::int64_t scale_denominator(const std::vector<Rat>& xs,
                               const std::vector<Rat>& ys) {
  mpz_class l = 1;
  auto feed = [&](const std::vector<Rat>& v) {
    for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  };
  feed(xs);
  feed(ys);
  static const mpz_class max_scale("4611686018427387904");  // 2^62
  if (l > max_scale) return 0;
  // Magnitude check: the longest possible shortest path (every grid edge
  // once) must stay far from int64 range.
  mpz_class worst = 0;
  auto check = [&](const std::vector<Rat>& v) {
    for (const auto& r : v) {
      mpz_class s = r.get_num() * (l / r.get_den());
      if (s < 0) s = -s;
      if (s > worst) worst = s;
    }
  };
  check(xs);
  check(ys);
  mpz_class cells = mpz_class(static_cast<long>(xs.size() + 1)) *
                    mpz_class(static_cast<long>(ys.size() + 1));
  mpz_class bound = worst * 8 * cells;
  static const mpz_class hi(std::numeric_limits<std::int64_t>::max());
  if (bound >= hi / 4) return 0;
  return static_cast<std::int64_t>(l.get_si());
}

std::int64_t scaled_value(const Rat& r, std::int64_t scale) {
  mpz_class s = r.get_num() * (mpz_class(static_cast<long>(scale)) / r.get_den());
  return static_cast<std::int64_t>(s.get_si());
}

}  // namespace

int HananGraph::node_at(const Point& p) const {
  int i = grid.x_index(p.x), j = grid.y_index(p.y);
  if (i < 0 || j < 0) return -1;
  return node_of[static_cast<std::size_t>(j) * grid.nx + i];
}

HananGraph build_hanan_from_grid(const PolyGrid& g) {
  HananGraph h;
  h.grid = g;
  const int nx = h.grid.nx, ny = h.grid.ny;
  h.node_of.assign(static_cast<std::size_t>(nx) * ny, -1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (h.grid.node_inside(i, j)) {
        h.node_of[static_cast<std::size_t>(j) * nx + i] =
            static_cast<int>(h.nodes.size());
        h.nodes.emplace_back(i, j);
      }
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i)
      if (h.grid.hedge_inside(i, j)) ++h.edge_count;
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (h.grid.vedge_inside(i, j)) ++h.edge_count;

  std::int64_t sc = scale_denominator(h.grid.xs, h.grid.ys);
  if (sc > 0) {
    h.scaled = true;
    h.scale = sc;
    h.sx.reserve(h.grid.xs.size());
    h.sy.reserve(h.grid.ys.size());
    for (const auto& x : h.grid.xs) h.sx.push_back(scaled_value(x, sc));
    for (const auto& y : h.grid.ys) h.sy.push_back(scaled_value(y, sc));
  }
  return h;
}

HananGraph build_hanan(const OrthoPolygon& p, const std::vector<Point>& extra) {
  return build_hanan_from_grid(build_grid(p, extra));
}

namespace {

// Dijkstra over the implicit grid graph with int64 weights.
std::vector<std::int64_t> dijkstra_scaled(const HananGraph& h, int src) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(h.nodes.size(), INF);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[src] = 0;
  pq.push({0, src});
  const int nx = h.grid.nx;
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du != dist[u]) continue;
    auto [i, j] = h.nodes[u];
    auto relax = [&](int ni, int nj, std::int64_t w) {
      int v = h.node_of[static_cast<std::size_t>(nj) * nx + ni];
      if (v < 0) return;
      if (du + w < dist[v]) {
        dist[v] = du + w;
        pq.push({dist[v], v});
      }
    };
    if (i + 1 < nx && h.grid.hedge_inside(i, j))
      relax(i + 1, j, h.sx[i + 1] - h.sx[i]);
    if (i - 1 >= 0 && h.grid.hedge_inside(i - 1, j))
      relax(i - 1, j, h.sx[i] - h.sx[i - 1]);
    if (j + 1 < h.grid.ny && h.grid.vedge_inside(i, j))
      relax(i, j + 1, h.sy[j + 1] - h.sy[j]);
    if (j - 1 >= 0 && h.grid.vedge_inside(i, j - 1))
      relax(i, j - 1, h.sy[j] - h.sy[j - 1]);
  }
  return dist;
}

// Exact-rational Dijkstra (fallback when int64 scaling is unavailable).
std::vector<std::pair<bool, Rat>> dijkstra_exact(const HananGraph& h, int src) {
  std::vector<std::pair<bool, Rat>> dist(h.nodes.size(), {false, Rat(0)});
  std::set<std::pair<Rat, int>> pq;
  dist[src] = {true, Rat(0)};
  pq.insert({Rat(0), src});
  const int nx = h.grid.nx;
  while (!pq.empty()) {
    auto [du, u] = *pq.begin();
    pq.erase(pq.begin());
    auto [i, j] = h.nodes[u];
    auto relax = [&](int ni, int nj, const Rat& w) {
      int v = h.node_of[static_cast<std::size_t>(nj) * nx + ni];
      if (v < 0) return;
      Rat nd = du + w;
      if (!dist[v].first || nd < dist[v].second) {
        if (dist[v].first) pq.erase({dist[v].second, v});
        dist[v] = {true, nd};
        pq.insert({nd, v});
      }
    };
    if (i + 1 < nx && h.grid.hedge_inside(i, j))
      relax(i + 1, j, h.grid.xs[i + 1] - h.grid.xs[i]);
    if (i - 1 >= 0 && h.grid.hedge_inside(i - 1, j))
      relax(i - 1, j, h.grid.xs[i] - h.grid.xs[i - 1]);
    if (j + 1 < h.grid.ny && h.grid.vedge_inside(i, j))
      relax(i, j + 1, h.grid.ys[j + 1] - h.grid.ys[j]);
    if (j - 1 >= 0 && h.grid.vedge_inside(i, j - 1))
      relax(i, j - 1, h.grid.ys[j] - h.grid.ys[j - 1]);
  }
  return dist;
}

}  // namespace

std::vector<Rat> geodesic_from(const HananGraph& g, const Point& src) {
  int s = g.node_at(src);
  if (s < 0) throw std::invalid_argument("geodesic_from: source is not a node");
  std::vector<Rat> out(g.nodes.size());
  if (g.scaled) {
    auto d = dijkstra_scaled(g, s);
    const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == INF)
        throw std::runtime_error("geodesic_from: unreachable node");
      out[k] = rat(d[k], g.scale);
    }
  } else {
    auto d = dijkstra_exact(g, s);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (!d[k].first)
        throw std::runtime_error("geodesic_from: unreachable node");
      out[k] = d[k].second;
    }
  }
  return out;
}

Rat geodesic_dist(const HananGraph& g, const Point& a, const Point& b) {
  int t = g.node_at(b);
  if (t < 0) throw std::invalid_argument("geodesic_dist: target is not a node");
  return geodesic_from(g, a)[t];
}

DistanceMatrix all_pairs_vertex_dist(const OrthoPolygon& p, const PolyGrid& g) {
  HananGraph h = build_hanan_from_grid(g);
  DistanceMatrix m;
  m.vertices = p.all_vertices();
  const std::size_t n = m.vertices.size();
  std::vector<int> vnode(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.id[m.vertices[i]] = static_cast<int>(i);
    vnode[i] = h.node_at(m.vertices[i]);
    if (vnode[i] < 0)
      throw std::logic_error("all_pairs_vertex_dist: vertex missing from grid");
  }
  m.d.assign(n, std::vector<Rat>(n, Rat(0)));
  m.has_scaled = h.scaled;
  m.scale = h.scale;
  if (m.has_scaled) m.ds.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (h.scaled) {
      auto d = dijkstra_scaled(h, vnode[i]);
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t v = d[vnode[j]];
        if (v == std::numeric_limits<std::int64_t>::max())
          throw std::runtime_error("all_pairs_vertex_dist: unreachable vertex");
        m.ds[i][j] = v;
        m.d[i][j] = rat(v, m.scale);
      }
    } else {
      auto d = dijkstra_exact(h, vnode[i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[vnode[j]].first)
          throw std::runtime_error("all_pairs_vertex_dist: unreachable vertex");
        m.d[i][j] = d[vnode[j]].second;
      }
    }
  }
  return m;
}

DistanceMatrix all_pairs_vertex_dist(const OrthoPolygon& p) {
  return all_pairs_vertex_dist(p, build_grid(p));
}

}  // namespace dispgal
