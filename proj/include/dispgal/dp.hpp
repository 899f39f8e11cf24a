#pragma once

#include <optional>

#include "dispgal/office.hpp"

namespace dispgal {

// True iff no vertex of one corridor sees into another corridor's interior.
bool check_independent(const OfficeContext& oc);

// Exact decision for hole-free independent offices: a guard set with
// dispersion >= ell, or nullopt. Throws std::invalid_argument when the
// preconditions (tree structure, independence) fail.
std::optional<Solution> decide_dp(const OfficeContext& oc, const Rat& ell);

Solution max_dispersion_dp(const OfficeContext& oc);
Solution max_dispersion_dp(const OfficePolygon& o);

namespace dp_detail {

// Test-facing mirror of the selection engine over exact rationals.
struct Config {
  std::vector<int> guards;
  bool covers_parent = false;
  std::array<Rat, 2> dgate{};  // min guard distance to gates[0] / gates[1]
};

struct Arm {
  std::array<int, 2> gates{};  // vertex ids, [left-or-bottom, right-or-top]
  bool vertical = true;
  bool positive = true;  // extends top (vertical) / right (horizontal)
  Rat order_key;         // corridor's low coordinate along the sort axis
  std::vector<Config> configs;
};

// Greedy pass over arms of one axis (sorted by order_key): the smallest
// feasible configuration per arm, or nullopt. "Smaller" = larger distance to
// the far gate (gates[1]).
std::optional<std::vector<int>> greedy_select(const DistanceMatrix& D,
                                              const std::vector<Arm>& arms,
                                              const Rat& ell);

// Cross-axis selection: per-arm configuration indices such that all pairwise
// configuration distances are >= ell, or nullopt. corners = vertex ids of
// the room's BL, BR, TL, TR corners.
std::optional<std::vector<int>> independent_set(const DistanceMatrix& D,
                                                const std::vector<Arm>& arms,
                                                const std::array<int, 4>& corners,
                                                const Rat& ell);

// Inner step of the configuration construction: among the feasible
// selections, maximize the minimum distance of any chosen configuration to
// the designated vertex. Returns the achieved bound with a witnessing
// selection.
struct MaxGateResult {
  Rat bound;
  std::vector<int> chosen;
};
std::optional<MaxGateResult> max_gate_selection(const DistanceMatrix& D,
                                                const std::vector<Arm>& arms,
                                                const std::array<int, 4>& corners,
                                                const Rat& ell, int blue_vertex);

}  // namespace dp_detail

}  // namespace dispgal
