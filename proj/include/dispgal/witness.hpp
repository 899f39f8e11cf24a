#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dispgal/geodesic.hpp"
#include "dispgal/grid.hpp"

namespace dispgal {

// Guard set with its realized dispersion distance. A set with at most one
// guard has no pair, reported as infinite (nullopt).
struct Solution {
  std::vector<Point> guards;
  std::optional<Rat> dispersion;  // nullopt = infinite

  bool infinite() const { return !dispersion.has_value(); }
};

// a < b with nullopt as the top element.
bool dispersion_less(const std::optional<Rat>& a, const std::optional<Rat>& b);
std::string dispersion_str(const std::optional<Rat>& d);

// Interior cells of the coordinate grid together with, per cell, the set of
// polygon vertices whose visibility region contains the whole cell. Within a
// cell that set is constant, so the grid refines the atomic visibility
// arrangement.
struct CellGrid {
  std::vector<std::pair<int, int>> cells;  // inside cells (i, j)
  std::vector<int> cell_at;                // grid cell -> index in `cells`, or -1
  int nverts = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> cover;  // row per cell, bit per vertex

  bool covers(std::size_t cell_idx, int v) const {
    return (cover[cell_idx * words + static_cast<std::size_t>(v) / 64] >>
            (static_cast<std::size_t>(v) % 64)) &
           1u;
  }
  const std::uint64_t* row(std::size_t cell_idx) const {
    return &cover[cell_idx * words];
  }
};

CellGrid build_cells(const PolyGrid& g, const std::vector<Point>& vertices);

// Indices (into CellGrid::cells) of cells whose covering set is
// inclusion-minimal among all cells.
std::vector<int> shadow_cell_indices(const CellGrid& c);

// Shared per-polygon state for the solvers and the verifier.
struct PolyContext {
  OrthoPolygon poly;
  std::vector<Point> vertices;
  PolyGrid grid;
  CellGrid cells;
  std::vector<int> shadows;
  DistanceMatrix dist;

  int vertex_index(const Point& p) const { return dist.index_of(p); }
};

// Validates the polygon (throws std::invalid_argument when invalid) and
// precomputes grid, cell covers, shadow cells and vertex distances.
PolyContext build_context(const OrthoPolygon& p);

// Centers of the shadow cells: covering them covers the polygon.
std::vector<Point> shadow_witnesses(const PolyContext& ctx);

// True iff every cell is covered by some guard. Guards must be polygon
// vertices (throws std::invalid_argument otherwise).
bool verify_coverage(const PolyContext& ctx, const std::vector<Point>& guards);

struct VerifyReport {
  bool ok = false;
  bool coverage_ok = false;
  bool dispersion_ok = false;
  std::optional<Rat> actual;  // nullopt = infinite
  bool actual_infinite = false;
  std::optional<Point> uncovered;                    // a point seen by no guard
  std::optional<std::pair<Point, Point>> min_pair;   // closest guard pair
  std::string message;
};

// Coverage plus exact equality of the claimed dispersion value.
VerifyReport verify_solution(const PolyContext& ctx,
                             const std::vector<Point>& guards,
                             const std::optional<Rat>& claimed);
VerifyReport verify_solution(const PolyContext& ctx, const Solution& sol);

// Minimum pairwise geodesic distance (nullopt when fewer than two guards).
std::optional<Rat> realized_dispersion(const DistanceMatrix& dist,
                                       const std::vector<Point>& guards);

}  // namespace dispgal
