#include "dispgal/grid.hpp"

#include <algorithm>
#include <set>

namespace dispgal {

namespace {

int find_exact(const std::vector<Rat>& v, const Rat& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return -1;
  return static_cast<int>(it - v.begin());
}

int find_floor(const std::vector<Rat>& v, const Rat& x) {
  auto it = std::upper_bound(v.begin(), v.end(), x);
  return static_cast<int>(it - v.begin()) - 1;
}

}  // namespace

int PolyGrid::x_index(const Rat& v) const { return find_exact(xs, v); }
int PolyGrid::y_index(const Rat& v) const { return find_exact(ys, v); }
int PolyGrid::x_floor(const Rat& v) const { return find_floor(xs, v); }
int PolyGrid::y_floor(const Rat& v) const { return find_floor(ys, v); }

int PolyGrid::cells_inside(int i0, int i1, int j0, int j1) const {
  auto ps = [&](int i, int j) {
    if (i <= 0 || j <= 0) return 0;
    return cell_prefix[static_cast<std::size_t>(j - 1) * (nx - 1) + (i - 1)];
  };
  return ps(i1, j1) - ps(i0, j1) - ps(i1, j0) + ps(i0, j0);
}

bool PolyGrid::rect_inside(int i0, int i1, int j0, int j1) const {
  if (i0 > i1 || j0 > j1 || i0 < 0 || j0 < 0 || i1 > nx - 1 || j1 > ny - 1)
    return false;
  if (i0 == i1 && j0 == j1) return node_inside(i0, j0);
  if (i0 == i1) {
    auto vp = [&](int j) {
      return vedge_prefix[static_cast<std::size_t>(i0) * (ny - 1) + j];
    };
    int total = (j0 == 0 ? vp(j1 - 1) : vp(j1 - 1) - vp(j0 - 1));
    return total == j1 - j0;
  }
  if (j0 == j1) {
    auto hp = [&](int i) {
      return hedge_prefix[static_cast<std::size_t>(j0) * (nx - 1) + i];
    };
    int total = (i0 == 0 ? hp(i1 - 1) : hp(i1 - 1) - hp(i0 - 1));
    return total == i1 - i0;
  }
  return cells_inside(i0, i1, j0, j1) == (i1 - i0) * (j1 - j0);
}

PolyGrid build_grid(const OrthoPolygon& p, const std::vector<Point>& extra) {
  PolyGrid g;
  std::set<Rat> xset, yset;
  for (const auto& v : p.all_vertices()) {
    xset.insert(v.x);
    yset.insert(v.y);
  }
  for (const auto& v : extra) {
    xset.insert(v.x);
    yset.insert(v.y);
  }
  g.xs.assign(xset.begin(), xset.end());
  g.ys.assign(yset.begin(), yset.end());
  g.nx = static_cast<int>(g.xs.size());
  g.ny = static_cast<int>(g.ys.size());
  const int cw = g.nx - 1, ch = g.ny - 1;
  g.cell.assign(static_cast<std::size_t>(cw) * ch, 0);

  // Scanline parity per cell row: a vertical polygon edge toggles insideness
  // where it spans the whole row band.
  struct VEdge {
    Rat x, ylo, yhi;
  };
  std::vector<VEdge> vedges;
  auto collect = [&](const std::vector<Point>& ring) {
    const std::size_t k = ring.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % k];
      if (a.x == b.x)
        vedges.push_back(VEdge{a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
    }
  };
  collect(p.outer);
  for (const auto& h : p.holes) collect(h);

  std::vector<int> toggle(cw + 1);
  for (int j = 0; j < ch; ++j) {
    std::fill(toggle.begin(), toggle.end(), 0);
    for (const auto& e : vedges) {
      if (e.ylo <= g.ys[j] && g.ys[j + 1] <= e.yhi) {
        int i = g.x_index(e.x);
        if (i >= 0) toggle[i] ^= 1;
      }
    }
    int parity = 0;
    for (int i = 0; i < cw; ++i) {
      parity ^= toggle[i];
      g.cell[static_cast<std::size_t>(j) * cw + i] = static_cast<uint8_t>(parity);
    }
  }

  g.cell_prefix.assign(static_cast<std::size_t>(cw) * ch, 0);
  for (int j = 0; j < ch; ++j)
    for (int i = 0; i < cw; ++i) {
      int v = g.cell[static_cast<std::size_t>(j) * cw + i];
      int left = i > 0 ? g.cell_prefix[static_cast<std::size_t>(j) * cw + i - 1] : 0;
      int up = j > 0 ? g.cell_prefix[static_cast<std::size_t>(j - 1) * cw + i] : 0;
      int diag = (i > 0 && j > 0)
                     ? g.cell_prefix[static_cast<std::size_t>(j - 1) * cw + i - 1]
                     : 0;
      g.cell_prefix[static_cast<std::size_t>(j) * cw + i] = v + left + up - diag;
    }

  g.vedge_prefix.assign(static_cast<std::size_t>(g.nx) * ch, 0);
  for (int i = 0; i < g.nx; ++i) {
    int run = 0;
    for (int j = 0; j < ch; ++j) {
      run += g.vedge_inside(i, j) ? 1 : 0;
      g.vedge_prefix[static_cast<std::size_t>(i) * ch + j] = run;
    }
  }
  g.hedge_prefix.assign(static_cast<std::size_t>(g.ny) * cw, 0);
  for (int j = 0; j < g.ny; ++j) {
    int run = 0;
    for (int i = 0; i < cw; ++i) {
      run += g.hedge_inside(i, j) ? 1 : 0;
      g.hedge_prefix[static_cast<std::size_t>(j) * cw + i] = run;
    }
  }
  return g;
}

}  // namespace dispgal
