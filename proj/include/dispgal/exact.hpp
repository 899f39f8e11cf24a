#pragma once

#include <optional>

#include "dispgal/sat.hpp"
#include "dispgal/witness.hpp"

namespace dispgal {

// One variable per polygon vertex; a coverage clause per shadow witness and a
// binary exclusion clause per vertex pair with geodesic distance < ell.
sat::Cnf build_decision_cnf(const PolyContext& ctx, const Rat& ell);

struct SolveBudget {
  // Wall-clock deadline in seconds since an arbitrary start; 0 = none.
  double seconds = 0;
};

// Guard set with dispersion >= ell, or nullopt when none exists. The
// returned solution carries its actual realized dispersion, which may exceed
// the probed value.
std::optional<Solution> decide(const PolyContext& ctx, const Rat& ell);

// Optimal dispersion via binary search over the pairwise vertex distances,
// with bounds updated from each probe's realized dispersion. A single vertex
// covering every witness yields the infinite-dispersion solution.
// Throws std::runtime_error when the budget expires.
Solution max_dispersion(const PolyContext& ctx, const SolveBudget& budget = {});
Solution max_dispersion(const OrthoPolygon& poly);

// Number of distinct guard sets with dispersion >= ell (capped).
long enumerate_optimal(const PolyContext& ctx, const Rat& ell, long cap);

}  // namespace dispgal
