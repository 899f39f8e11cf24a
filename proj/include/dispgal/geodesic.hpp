#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dispgal/grid.hpp"

namespace dispgal {

// Pairwise geodesic L1-distances between polygon vertices. Values are exact
// rationals; when every coordinate is a multiple of 1/scale with int64-sized
// numerators, a scaled integer copy is kept for fast comparisons
// (d[i][j] == ds[i][j] / scale, exactly).
struct DistanceMatrix {
  std::vector<Point> vertices;
  std::vector<std::vector<Rat>> d;
  bool has_scaled = false;
  std::int64_t scale = 1;
  std::vector<std::vector<std::int64_t>> ds;
  std::map<Point, int> id;

  int index_of(const Point& p) const {
    auto it = id.find(p);
    return it == id.end() ? -1 : it->second;
  }
};

// Shortest-path graph on the polygon-restricted coordinate grid. Every
// polygon vertex is a node; edges are the grid segments inside the polygon,
// weighted by their L1 length.
struct HananGraph {
  PolyGrid grid;
  std::vector<int> node_of;  // grid point (i + j*nx) -> node id, or -1
  std::vector<std::pair<int, int>> nodes;  // node id -> (i, j)
  std::size_t edge_count = 0;

  bool scaled = false;  // int64 edge weights available
  std::int64_t scale = 1;
  std::vector<std::int64_t> sx, sy;  // scaled coordinates when `scaled`

  int node_at(const Point& p) const;
  Point node_point(int n) const {
    return Point{grid.xs[nodes[n].first], grid.ys[nodes[n].second]};
  }
};

HananGraph build_hanan(const OrthoPolygon& p,
                       const std::vector<Point>& extra = {});
HananGraph build_hanan_from_grid(const PolyGrid& g);

// Shortest-path distance between two graph nodes. Throws when a point is not
// a node or the pair is unreachable.
Rat geodesic_dist(const HananGraph& g, const Point& a, const Point& b);

// Distances from a source node to every node (rational, exact).
std::vector<Rat> geodesic_from(const HananGraph& g, const Point& src);

DistanceMatrix all_pairs_vertex_dist(const OrthoPolygon& p);
DistanceMatrix all_pairs_vertex_dist(const OrthoPolygon& p, const PolyGrid& g);

}  // namespace dispgal
