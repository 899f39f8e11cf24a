#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dispgal/witness.hpp"

namespace dispgal {

struct GenConfig {
  std::uint64_t seed = 1;
  int n_rooms = 5;
  int size_lo = 3;  // room side lengths, integers >= 3
  int size_hi = 8;
  bool allow_holes = false;
};

// Iteratively places randomly sized rooms, connecting each new room to an
// existing one by a width-1 corridor; with allow_holes, extra corridors
// close cycles. Deterministic in the seed. Throws std::runtime_error when
// placement fails after bounded retries.
OfficePolygon gen_random_office(const GenConfig& c);

// The c-eps-packing: three stacked rooms, c unit-square corridors placed
// alternatingly between them at horizontal spacing tau (0 < tau < eps/2).
OfficePolygon gen_packing(int c, const Rat& eps, const Rat& tau);

// Stacked-rooms family (k >= 2): k rooms of width 2k^2+4k+1 joined by k
// corridor strips; optimal dispersion 4k+1.
OfficePolygon gen_ratio_family(int k);
// Smallest cover: one guard per strip (size k).
std::vector<Point> ratio_cover_guards(int k);
// Maximally dispersed set of size 2k-2 realizing dispersion 4k+1.
std::vector<Point> ratio_dispersed_guards(int k);

// Integer office with three unit-square corridors whose optimal dispersion
// is exactly 3.
OfficePolygon gen_fig_disp3();

// Uniform scale (>0) plus translation; preserves office validity.
OfficePolygon office_affine(const OfficePolygon& o, const Rat& scale,
                            const Rat& dx, const Rat& dy);

struct Instance {
  OrthoPolygon poly;
  std::optional<OfficePolygon> office;
};

Instance instance_from_office(const OfficePolygon& o);

// JSON files: fields `outer`, `holes`, optional `office`; coordinates are
// integers or "a/b" strings. Readers validate and throw std::runtime_error
// with diagnostics.
Instance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& inst);
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

Solution read_solution(const std::string& path);
void write_solution(const std::string& path, const Solution& sol);
std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);

}  // namespace dispgal
