#include "dispgal/exact.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace dispgal {

namespace {

std::vector<std::vector<sat::Lit>> coverage_clauses(const PolyContext& ctx) {
  std::set<std::vector<sat::Lit>> dedup;
  for (int s : ctx.shadows) {
    std::vector<sat::Lit> cl;
    for (int v = 0; v < ctx.cells.nverts; ++v)
      if (ctx.cells.covers(static_cast<std::size_t>(s), v)) cl.push_back(v + 1);
    dedup.insert(std::move(cl));
  }
  return {dedup.begin(), dedup.end()};
}

}  // namespace

sat::Cnf build_decision_cnf(const PolyContext& ctx, const Rat& ell) {
  sat::Cnf f;
  f.num_vars = static_cast<int>(ctx.vertices.size());
  for (auto& cl : coverage_clauses(ctx)) f.add_clause(std::move(cl));
  const std::size_t n = ctx.vertices.size();
  if (ctx.dist.has_scaled) {
    // ell may not be representable on the scaled lattice; compare exactly:
    // ds/scale < ell  <=>  ds < ell * scale.
    Rat bound = ell * Rat(static_cast<long>(ctx.dist.scale));
    bool integral = bound.get_den() == 1 && rat_fits_int64(bound);
    std::int64_t b = integral ? rat_to_int64(bound) : 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool close = integral ? ctx.dist.ds[i][j] < b
                              : Rat(static_cast<long>(ctx.dist.ds[i][j])) < bound;
        if (close)
          f.add_clause({-(static_cast<int>(i) + 1), -(static_cast<int>(j) + 1)});
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (ctx.dist.d[i][j] < ell)
          f.add_clause({-(static_cast<int>(i) + 1), -(static_cast<int>(j) + 1)});
  }
  return f;
}

std::optional<Solution> decide(const PolyContext& ctx, const Rat& ell) {
  sat::Cnf f = build_decision_cnf(ctx, ell);
  sat::Result r = sat::solve(f);
  if (!r.sat()) return std::nullopt;
  Solution sol;
  for (std::size_t v = 0; v < ctx.vertices.size(); ++v)
    if (r.model[static_cast<int>(v) + 1]) sol.guards.push_back(ctx.vertices[v]);
  sol.dispersion = realized_dispersion(ctx.dist, sol.guards);
  if (dispersion_less(sol.dispersion, ell))
    throw std::logic_error("decide: realized dispersion below probe");
  return sol;
}

namespace {

// Is there one vertex whose visibility region covers every shadow cell?
std::optional<int> single_cover_vertex(const PolyContext& ctx) {
  for (int v = 0; v < ctx.cells.nverts; ++v) {
    bool all = true;
    for (int s : ctx.shadows)
      if (!ctx.cells.covers(static_cast<std::size_t>(s), v)) {
        all = false;
        break;
      }
    if (all) return v;
  }
  return std::nullopt;
}

}  // namespace

Solution max_dispersion(const PolyContext& ctx, const SolveBudget& budget) {
  auto start = std::chrono::steady_clock::now();
  auto expired = [&] {
    if (budget.seconds <= 0) return false;
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    return el.count() > budget.seconds;
  };

  if (auto v = single_cover_vertex(ctx)) {
    Solution sol;
    sol.guards.push_back(ctx.vertices[static_cast<std::size_t>(*v)]);
    sol.dispersion = std::nullopt;
    return sol;
  }

  std::set<Rat> cand_set;
  const std::size_t n = ctx.vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cand_set.insert(ctx.dist.d[i][j]);
  std::vector<Rat> cand(cand_set.begin(), cand_set.end());
  if (cand.empty()) throw std::logic_error("max_dispersion: no distances");

  // Invariant: best is feasible; candidates in [lo, hi) undecided; cand[hi]
  // (if any) infeasible.
  auto sol0 = decide(ctx, cand.front());
  if (!sol0) throw std::logic_error("max_dispersion: smallest probe infeasible");
  Solution best = *sol0;
  std::size_t lo, hi = cand.size();
  {
    auto it = std::upper_bound(cand.begin(), cand.end(), *best.dispersion);
    lo = static_cast<std::size_t>(it - cand.begin());
  }
  while (lo < hi) {
    if (expired()) throw std::runtime_error("max_dispersion: budget exceeded");
    std::size_t mid = lo + (hi - lo) / 2;
    auto probe = decide(ctx, cand[mid]);
    if (probe) {
      best = *probe;
      auto it = std::upper_bound(cand.begin(), cand.end(), *best.dispersion);
      lo = static_cast<std::size_t>(it - cand.begin());
    } else {
      hi = mid;
    }
  }
  return best;
}

Solution max_dispersion(const OrthoPolygon& poly) {
  PolyContext ctx = build_context(poly);
  return max_dispersion(ctx);
}

long enumerate_optimal(const PolyContext& ctx, const Rat& ell, long cap) {
  sat::Cnf f = build_decision_cnf(ctx, ell);
  return sat::count_models(f, {}, cap);
}

}  // namespace dispgal
