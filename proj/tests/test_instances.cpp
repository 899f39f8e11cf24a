#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dispgal/dp.hpp"
#include "dispgal/instances.hpp"
#include "test_util.hpp"

using namespace dispgal;
using namespace dispgal::testutil;

TEST_CASE("gen_random_office: one room is a single rectangle") {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.n_rooms = 1;
  OfficePolygon o = gen_random_office(cfg);
  CHECK(o.rooms.size() == 1);
  CHECK(o.corridors.empty());
}

TEST_CASE("gen_random_office: trees have no holes, generators are valid") {
  GenConfig cfg;
  cfg.seed = 12;
  cfg.n_rooms = 5;
  OfficePolygon o = gen_random_office(cfg);
  CHECK(validate_office(o).ok());
  CHECK(o.corridors.size() == o.rooms.size() - 1);
  CHECK(office_to_polygon(o).holes.empty());
}

TEST_CASE("gen_random_office: hole mode closes at least one cycle") {
  bool found = false;
  for (std::uint64_t seed = 1; seed <= 40 && !found; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 8;
    cfg.allow_holes = true;
    OfficePolygon o = gen_random_office(cfg);
    if (!office_to_polygon(o).holes.empty()) found = true;
  }
  CHECK(found);
}

TEST_CASE("gen_random_office is deterministic in the seed") {
  GenConfig cfg;
  cfg.seed = 77;
  cfg.n_rooms = 6;
  OfficePolygon a = gen_random_office(cfg);
  OfficePolygon b = gen_random_office(cfg);
  REQUIRE(a.rooms.size() == b.rooms.size());
  for (std::size_t i = 0; i < a.rooms.size(); ++i) CHECK(a.rooms[i] == b.rooms[i]);
  cfg.seed = 78;
  OfficePolygon c = gen_random_office(cfg);
  bool differs = c.rooms.size() != a.rooms.size();
  for (std::size_t i = 0; !differs && i < a.rooms.size(); ++i)
    if (!(a.rooms[i] == c.rooms[i])) differs = true;
  CHECK(differs);
}

TEST_CASE("gen_packing: structure and parameter validation") {
  OfficePolygon o = gen_packing(11, rat(1, 2), rat(1, 8));
  CHECK(o.rooms.size() == 3);
  CHECK(o.corridors.size() == 11);
  CHECK(validate_office(o).ok());
  // Middle room has height exactly 1; corridors are unit squares.
  CHECK(o.rooms[1].height() == 1);
  for (const auto& c : o.corridors) {
    CHECK(c.rect.width() == 1);
    CHECK(c.rect.height() == 1);
  }
  CHECK_THROWS_AS(gen_packing(0, rat(1, 2), rat(1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(gen_packing(5, rat(3, 2), rat(1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(gen_packing(5, rat(1, 2), rat(1, 4)), std::invalid_argument);
}

TEST_CASE("gen_packing corridors are pairwise independent") {
  for (int c : {3, 9, 10, 11}) {
    OfficeContext oc = build_office_context(gen_packing(c, rat(1, 2), rat(1, 8)));
    CHECK(check_independent(oc));
  }
  // Other parameter choices keep independence as well.
  OfficeContext oc = build_office_context(gen_packing(7, rat(2, 3), rat(1, 5)));
  CHECK(check_independent(oc));
}

TEST_CASE("gen_ratio_family: structure") {
  OfficePolygon o = gen_ratio_family(2);
  CHECK(o.rooms.size() == 2);
  CHECK(o.corridors.size() == 2);
  CHECK(validate_office(o).ok());
  for (const auto& r : o.rooms) CHECK(r.width() == Rat(2 * 4 + 8 + 1));
  OfficePolygon o3 = gen_ratio_family(3);
  CHECK(o3.rooms.size() == 3);
  CHECK(o3.corridors.size() == 6);
  CHECK(validate_office(o3).ok());
  CHECK_THROWS_AS(gen_ratio_family(1), std::invalid_argument);
}

TEST_CASE("gen_fig_disp3 is a valid integer office") {
  OfficePolygon o = gen_fig_disp3();
  CHECK(validate_office(o).ok());
  CHECK(o.corridors.size() == 3);
  for (const auto& c : o.corridors) {
    CHECK(c.rect.width() == 1);
    CHECK(c.rect.height() == 1);
  }
}

TEST_CASE("instance files round-trip exactly") {
  GenConfig cfg;
  cfg.seed = 9;
  cfg.n_rooms = 5;
  cfg.allow_holes = true;
  Instance inst = instance_from_office(gen_random_office(cfg));
  std::string text = instance_to_json(inst);
  Instance back = instance_from_json(text);
  CHECK(back.poly.outer == inst.poly.outer);
  CHECK(back.poly.holes == inst.poly.holes);
  REQUIRE(back.office.has_value());
  CHECK(back.office->rooms == inst.office->rooms);
}

TEST_CASE("rational coordinates survive serialization verbatim") {
  Instance inst = instance_from_office(gen_packing(9, rat(1, 2), rat(1, 8)));
  std::string text = instance_to_json(inst);
  CHECK(text.find("\"5/8\"") != std::string::npos);
  Instance back = instance_from_json(text);
  CHECK(back.poly.outer == inst.poly.outer);
  std::string again = instance_to_json(back);
  CHECK(again == text);
}

TEST_CASE("instance files surface validator errors") {
  // A counter-clockwise hole must be rejected at parse time.
  std::string text = R"({
    "outer": [[0,0],[3,0],[3,3],[0,3]],
    "holes": [[[1,1],[2,1],[2,2],[1,2]]]
  })";
  CHECK_THROWS_WITH_AS(static_cast<void>(instance_from_json(text)),
                       doctest::Contains("hole"), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(instance_from_json("{ nope")),
                  std::runtime_error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(instance_from_json(R"({"outer": [[0,"x"],[1,0],[1,1],[0,1]]})")),
      doctest::Contains("outer"), std::runtime_error);
}

TEST_CASE("solution files round-trip, including the infinite sentinel") {
  Solution s;
  s.guards = {pt(0, 0), Point{rat(5, 3), Rat(2)}};
  s.dispersion = rat(7, 2);
  Solution back = solution_from_json(solution_to_json(s));
  CHECK(back.guards == s.guards);
  CHECK(*back.dispersion == rat(7, 2));
  Solution inf;
  inf.guards = {pt(1, 1)};
  inf.dispersion = std::nullopt;
  Solution back2 = solution_from_json(solution_to_json(inf));
  CHECK(back2.infinite());
}

TEST_CASE("office_affine scales and translates exactly") {
  OfficePolygon o = office_affine(two_room_office(), rat(3, 2), rat(1, 3), Rat(-2));
  CHECK(validate_office(o).ok());
  CHECK(o.rooms[0].lo == Point{rat(1, 3), Rat(-2)});
  CHECK(o.rooms[0].hi == Point{rat(3, 2) * 3 + rat(1, 3), rat(3, 2) * 3 - 2});
}

TEST_CASE("compiled polygons of generated offices always validate") {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = 3 + static_cast<int>(seed % 7);
    cfg.allow_holes = seed % 2 == 0;
    OfficePolygon o;
    try {
      o = gen_random_office(cfg);
    } catch (...) {
      continue;
    }
    CHECK(validate_ortho(office_to_polygon(o)).ok());
  }
  CHECK(validate_ortho(office_to_polygon(gen_packing(7, rat(1, 2), rat(1, 8)))).ok());
  CHECK(validate_ortho(office_to_polygon(gen_ratio_family(4))).ok());
}
