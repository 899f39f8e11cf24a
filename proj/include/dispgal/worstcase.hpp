#pragma once

#include "dispgal/office.hpp"

namespace dispgal {

// Three-phase placement with pairwise geodesic distance >= 3 on office
// polygons with integer coordinates: vertical-corridor guards on left walls,
// horizontal-corridor guards on lower walls, then top-right room corners for
// rooms still uncovered. Throws std::invalid_argument on non-integer input
// or an invalid office.
Solution wc3(const OfficePolygon& o);
Solution wc3(const OfficeContext& oc);

// Every-other-vertex walk along each room's left and top walls, giving a
// guard set with pairwise geodesic distance >= 2 (assuming vertex spacing
// >= 1; rational coordinates allowed).
Solution wc2(const OfficePolygon& o);
Solution wc2(const OfficeContext& oc);

}  // namespace dispgal
