#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "dispgal/cli.hpp"
#include "dispgal/instances.hpp"
#include "dispgal/svg.hpp"
#include "test_util.hpp"

using namespace dispgal;
using namespace dispgal::testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("dispgal_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cli: generate, solve, verify loop closes") {
  TempDir tmp;
  std::string inst = tmp / "o.json", sol = tmp / "o.sol.json";
  CHECK(cli_run({"gen", "office", "--rooms", "4", "--seed", "3", "-o", inst}) == 0);
  CHECK(cli_run({"solve", inst, "--method", "sat", "-o", sol}) == 0);
  CHECK(cli_run({"verify", inst, sol}) == 0);
  CHECK(cli_run({"solve", inst, "--method", "wc2", "-o", sol}) == 0);
  CHECK(cli_run({"verify", inst, sol}) == 0);
  CHECK(cli_run({"solve", inst, "--method", "wc3", "-o", sol}) == 0);
  CHECK(cli_run({"verify", inst, sol}) == 0);
}

TEST_CASE("cli: verify flags a wrong dispersion value") {
  TempDir tmp;
  std::string inst = tmp / "sq.json", sol = tmp / "sq.sol.json";
  Instance square;
  square.poly = unit_square();
  write_instance(inst, square);
  Solution s;
  s.guards = {pt(0, 0), pt(1, 0)};
  s.dispersion = Rat(2);  // actual is 1
  write_solution(sol, s);
  CHECK(cli_run({"verify", inst, sol}) == 1);
}

TEST_CASE("cli: dp on a dependent instance fails with a domain error") {
  TempDir tmp;
  std::string inst = tmp / "dep.json";
  OfficePolygon dep;
  dep.rooms.push_back(Rect{pt(0, 0), pt(5, 3)});
  dep.rooms.push_back(Rect{pt(-4, 0), pt(-1, 3)});
  dep.rooms.push_back(Rect{pt(6, 0), pt(9, 3)});
  Corridor d1, d2;
  d1.rect = Rect{pt(-1, 1), pt(0, 2)};
  d1.room_a = 1;
  d1.room_b = 0;
  d2.rect = Rect{pt(5, 1), pt(6, 2)};
  d2.room_a = 0;
  d2.room_b = 2;
  dep.corridors.push_back(d1);
  dep.corridors.push_back(d2);
  write_instance(inst, instance_from_office(dep));
  CHECK(cli_run({"solve", inst, "--method", "dp"}) == 1);
}

TEST_CASE("cli: packing optimum stays below 2+eps") {
  TempDir tmp;
  std::string inst = tmp / "p.json", sol = tmp / "p.sol.json";
  CHECK(cli_run({"gen", "packing", "--c", "11", "--eps", "1/2", "--tau", "1/8",
                 "-o", inst}) == 0);
  CHECK(cli_run({"solve", inst, "--method", "sat", "-o", sol}) == 0);
  Solution s = read_solution(sol);
  REQUIRE(!s.infinite());
  CHECK(*s.dispersion < rat(5, 2));
  CHECK(*s.dispersion >= 2);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(cli_run({"solve"}) == 2);
  CHECK(cli_run({"frobnicate"}) == 2);
  TempDir tmp;
  CHECK(cli_run({"solve", tmp / "missing.json", "--method", "nope"}) == 2);
}

TEST_CASE("cli: io errors exit with 1") {
  TempDir tmp;
  CHECK(cli_run({"solve", tmp / "missing.json", "--method", "sat"}) == 1);
}

TEST_CASE("cli: render emits an svg with guards") {
  TempDir tmp;
  std::string inst = tmp / "r.json", sol = tmp / "r.sol.json", svg = tmp / "r.svg";
  CHECK(cli_run({"gen", "ratio", "--k", "2", "-o", inst}) == 0);
  CHECK(cli_run({"solve", inst, "--method", "sat", "-o", sol}) == 0);
  CHECK(cli_run({"render", inst, sol, "-o", svg}) == 0);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("circle") != std::string::npos);
  CHECK(text.find("rect") != std::string::npos);
}

TEST_CASE("cli: bench prints a table row per instance") {
  TempDir tmp;
  CHECK(cli_run({"gen", "office", "--rooms", "3", "--seed", "1", "-o", tmp / "a.json"}) == 0);
  CHECK(cli_run({"gen", "office", "--rooms", "4", "--seed", "2", "-o", tmp / "b.json"}) == 0);
  CHECK(cli_run({"bench", tmp.dir.string(), "--method", "sat"}) == 0);
}
