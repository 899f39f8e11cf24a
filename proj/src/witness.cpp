#include "dispgal/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dispgal {

bool dispersion_less(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a.has_value()) return false;          // inf < x is never true
  if (!b.has_value()) return true;           // finite < inf
  return *a < *b;
}

std::string dispersion_str(const std::optional<Rat>& d) {
  return d.has_value() ? rat_str(*d) : std::string("inf");
}

CellGrid build_cells(const PolyGrid& g, const std::vector<Point>& vertices) {
  CellGrid c;
  c.nverts = static_cast<int>(vertices.size());
  c.words = (static_cast<std::size_t>(c.nverts) + 63) / 64;
  const int cw = g.nx - 1, ch = g.ny - 1;
  c.cell_at.assign(static_cast<std::size_t>(cw) * ch, -1);
  for (int j = 0; j < ch; ++j)
    for (int i = 0; i < cw; ++i)
      if (g.cell_inside(i, j)) {
        c.cell_at[static_cast<std::size_t>(j) * cw + i] =
            static_cast<int>(c.cells.size());
        c.cells.emplace_back(i, j);
      }
  c.cover.assign(c.cells.size() * c.words, 0);

  for (int v = 0; v < c.nverts; ++v) {
    int vi = g.x_index(vertices[v].x), vj = g.y_index(vertices[v].y);
    if (vi < 0 || vj < 0)
      throw std::logic_error("build_cells: vertex not on the grid");
    for (std::size_t k = 0; k < c.cells.size(); ++k) {
      auto [i, j] = c.cells[k];
      int i0 = std::min(vi, i), i1 = std::max(vi, i + 1);
      int j0 = std::min(vj, j), j1 = std::max(vj, j + 1);
      if (g.cells_inside(i0, i1, j0, j1) == (i1 - i0) * (j1 - j0))
        c.cover[k * c.words + static_cast<std::size_t>(v) / 64] |=
            1ull << (static_cast<std::size_t>(v) % 64);
    }
  }
  return c;
}

namespace {

bool subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t w) {
  for (std::size_t k = 0; k < w; ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

int popcount_row(const std::uint64_t* a, std::size_t w) {
  int c = 0;
  for (std::size_t k = 0; k < w; ++k) c += __builtin_popcountll(a[k]);
  return c;
}

}  // namespace

std::vector<int> shadow_cell_indices(const CellGrid& c) {
  // Group identical covers; test minimality among the distinct covers only.
  std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    if (popcount_row(c.row(k), c.words) == 0)
      throw std::runtime_error(
          "shadow witnesses: cell covered by no vertex guard");
    std::vector<std::uint64_t> key(c.row(k), c.row(k) + c.words);
    groups[key].push_back(static_cast<int>(k));
  }
  struct Unique {
    const std::uint64_t* row;
    int pop;
    const std::vector<int>* members;
  };
  std::vector<Unique> uniq;
  uniq.reserve(groups.size());
  for (const auto& [key, members] : groups)
    uniq.push_back({key.data(), popcount_row(key.data(), c.words), &members});
  std::vector<int> result;
  for (const auto& u : uniq) {
    bool minimal = true;
    for (const auto& v : uniq) {
      if (v.row == u.row) continue;
      if (v.pop < u.pop && subset_of(v.row, u.row, c.words)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      result.insert(result.end(), u.members->begin(), u.members->end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

PolyContext build_context(const OrthoPolygon& p) {
  ValidationReport rep = validate_ortho(p);
  if (!rep.ok())
    throw std::invalid_argument("invalid polygon:\n" + rep.to_string());
  PolyContext ctx;
  ctx.poly = p;
  ctx.vertices = p.all_vertices();
  ctx.grid = build_grid(p);
  ctx.cells = build_cells(ctx.grid, ctx.vertices);
  ctx.shadows = shadow_cell_indices(ctx.cells);
  ctx.dist = all_pairs_vertex_dist(p, ctx.grid);
  return ctx;
}

std::vector<Point> shadow_witnesses(const PolyContext& ctx) {
  std::vector<Point> w;
  for (int s : ctx.shadows) {
    auto [i, j] = ctx.cells.cells[s];
    w.push_back(ctx.grid.cell_center(i, j));
  }
  return w;
}

namespace {

std::vector<int> guard_indices(const PolyContext& ctx,
                               const std::vector<Point>& guards) {
  std::vector<int> ids;
  ids.reserve(guards.size());
  for (const auto& g : guards) {
    int id = ctx.vertex_index(g);
    if (id < 0)
      throw std::invalid_argument("guard (" + rat_str(g.x) + "," + rat_str(g.y) +
                                  ") is not a polygon vertex");
    ids.push_back(id);
  }
  return ids;
}

}  // namespace

bool verify_coverage(const PolyContext& ctx, const std::vector<Point>& guards) {
  auto ids = guard_indices(ctx, guards);
  for (std::size_t k = 0; k < ctx.cells.cells.size(); ++k) {
    bool cov = false;
    for (int id : ids)
      if (ctx.cells.covers(k, id)) {
        cov = true;
        break;
      }
    if (!cov) return false;
  }
  return true;
}

std::optional<Rat> realized_dispersion(const DistanceMatrix& dist,
                                       const std::vector<Point>& guards) {
  if (guards.size() < 2) return std::nullopt;
  std::optional<Rat> best;
  std::vector<int> ids;
  for (const auto& g : guards) {
    int id = dist.index_of(g);
    if (id < 0)
      throw std::invalid_argument("realized_dispersion: guard not a vertex");
    ids.push_back(id);
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const Rat& d = dist.d[ids[a]][ids[b]];
      if (!best || d < *best) best = d;
    }
  return best;
}

VerifyReport verify_solution(const PolyContext& ctx,
                             const std::vector<Point>& guards,
                             const std::optional<Rat>& claimed) {
  VerifyReport r;
  auto ids = guard_indices(ctx, guards);
  r.coverage_ok = true;
  for (std::size_t k = 0; k < ctx.cells.cells.size(); ++k) {
    bool cov = false;
    for (int id : ids)
      if (ctx.cells.covers(k, id)) {
        cov = true;
        break;
      }
    if (!cov) {
      r.coverage_ok = false;
      auto [i, j] = ctx.cells.cells[k];
      r.uncovered = ctx.grid.cell_center(i, j);
      break;
    }
  }
  r.actual = realized_dispersion(ctx.dist, guards);
  r.actual_infinite = !r.actual.has_value();
  if (guards.size() >= 2) {
    std::optional<Rat> best;
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        const Rat& d = ctx.dist.d[ids[a]][ids[b]];
        if (!best || d < *best) {
          best = d;
          r.min_pair = std::make_pair(guards[a], guards[b]);
        }
      }
  }
  r.dispersion_ok =
      (!claimed.has_value() && !r.actual.has_value()) ||
      (claimed.has_value() && r.actual.has_value() && *claimed == *r.actual);
  r.ok = r.coverage_ok && r.dispersion_ok;
  if (!r.coverage_ok && r.uncovered) {
    r.message = "uncovered point (" + rat_str(r.uncovered->x) + "," +
                rat_str(r.uncovered->y) + ")";
  } else if (!r.dispersion_ok) {
    r.message = "dispersion mismatch: claimed " + dispersion_str(claimed) +
                ", actual " + dispersion_str(r.actual);
    if (r.min_pair)
      r.message += " between (" + rat_str(r.min_pair->first.x) + "," +
                   rat_str(r.min_pair->first.y) + ") and (" +
                   rat_str(r.min_pair->second.x) + "," +
                   rat_str(r.min_pair->second.y) + ")";
  } else {
    r.message = "ok";
  }
  return r;
}

VerifyReport verify_solution(const PolyContext& ctx, const Solution& sol) {
  return verify_solution(ctx, sol.guards, sol.dispersion);
}

}  // namespace dispgal
