#pragma once

#include <cstdint>
#include <vector>

#include "dispgal/geom.hpp"

namespace dispgal {

// Coordinate grid induced by the polygon's vertex coordinates, with O(1)
// containment queries for grid-aligned rectangles (possibly degenerate).
// Cell (i, j) is the open box (xs[i], xs[i+1]) x (ys[j], ys[j+1]); a cell is
// either entirely inside the closed polygon or entirely outside it, because
// the boundary lies on grid lines.
struct PolyGrid {
  std::vector<Rat> xs, ys;  // sorted, distinct
  int nx = 0, ny = 0;       // coordinate counts; cells are (nx-1) x (ny-1)

  std::vector<uint8_t> cell;       // (nx-1)*(ny-1), row-major by j
  std::vector<int> cell_prefix;    // 2D inclusive prefix sums of `cell`
  std::vector<int> vedge_prefix;   // per column i: prefix over j of vedge(i,j)
  std::vector<int> hedge_prefix;   // per row j: prefix over i of hedge(i,j)

  bool cell_inside(int i, int j) const {
    if (i < 0 || j < 0 || i >= nx - 1 || j >= ny - 1) return false;
    return cell[static_cast<std::size_t>(j) * (nx - 1) + i] != 0;
  }
  // Vertical unit segment x = xs[i], y in [ys[j], ys[j+1]].
  bool vedge_inside(int i, int j) const {
    return cell_inside(i - 1, j) || cell_inside(i, j);
  }
  // Horizontal unit segment y = ys[j], x in [xs[i], xs[i+1]].
  bool hedge_inside(int i, int j) const {
    return cell_inside(i, j - 1) || cell_inside(i, j);
  }
  bool node_inside(int i, int j) const {
    return cell_inside(i, j) || cell_inside(i - 1, j) || cell_inside(i, j - 1) ||
           cell_inside(i - 1, j - 1);
  }

  // Exact index of a coordinate, or -1 when not a grid coordinate.
  int x_index(const Rat& v) const;
  int y_index(const Rat& v) const;

  // Largest index with xs[i] <= v (requires xs.front() <= v <= xs.back()).
  int x_floor(const Rat& v) const;
  int y_floor(const Rat& v) const;

  // Closed rectangle [xs[i0],xs[i1]] x [ys[j0],ys[j1]] inside the polygon.
  // Degenerate spans (i0 == i1 and/or j0 == j1) are segments or points.
  bool rect_inside(int i0, int i1, int j0, int j1) const;

  int cells_inside(int i0, int i1, int j0, int j1) const;  // count in index box

  Point cell_center(int i, int j) const {
    return Point{(xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2};
  }
  Rect cell_rect(int i, int j) const {
    return Rect{Point{xs[i], ys[j]}, Point{xs[i + 1], ys[j + 1]}};
  }
};

// extra coordinate values are merged into the grid (used to snap query
// points that are not polygon vertices).
PolyGrid build_grid(const OrthoPolygon& p, const std::vector<Point>& extra = {});

}  // namespace dispgal
