#include "dispgal/instances.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dispgal {

namespace {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

long rng_range(std::mt19937_64& rng, long lo, long hi) {  // inclusive
  return lo + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Rect make_rect(long x1, long y1, long x2, long y2) {
  return Rect{Point{Rat(x1), Rat(y1)}, Point{Rat(x2), Rat(y2)}};
}

bool clear_of_all(const Rect& r, const std::vector<Rect>& rects,
                  const std::vector<std::size_t>& skip = {}) {
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    if (r.touches(rects[i])) return false;
  }
  return true;
}

}  // namespace

OfficePolygon gen_random_office(const GenConfig& c) {
  if (c.n_rooms < 1) throw std::invalid_argument("n_rooms must be positive");
  if (c.size_lo < 3 || c.size_hi < c.size_lo)
    throw std::invalid_argument("room sizes must satisfy 3 <= lo <= hi");
  std::mt19937_64 rng(c.seed);

  OfficePolygon o;
  std::vector<Rect> all;          // every placed rectangle, for clearance
  std::vector<std::size_t> room_at;  // room index -> index in `all`
  {
    long w = rng_range(rng, c.size_lo, c.size_hi);
    long h = rng_range(rng, c.size_lo, c.size_hi);
    o.rooms.push_back(make_rect(0, 0, w, h));
    room_at.push_back(0);
    all.push_back(o.rooms.back());
  }

  auto to_long = [](const Rat& r) { return rat_to_int64(r); };
  while (static_cast<int>(o.rooms.size()) < c.n_rooms) {
    bool placed = false;
    for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
      std::size_t pi = rng_below(rng, o.rooms.size());
      const Rect parent = o.rooms[pi];
      int side = static_cast<int>(rng_below(rng, 4));  // N E S W
      long gap = rng_range(rng, 1, 3);
      long w = rng_range(rng, c.size_lo, c.size_hi);
      long h = rng_range(rng, c.size_lo, c.size_hi);
      long px1 = to_long(parent.lo.x), py1 = to_long(parent.lo.y);
      long px2 = to_long(parent.hi.x), py2 = to_long(parent.hi.y);
      Rect corridor, room;
      if (side == 0 || side == 2) {
        long cx = rng_range(rng, px1 + 1, px2 - 2);
        long nx1 = rng_range(rng, cx + 2 - w, cx - 1);
        if (side == 0) {
          corridor = make_rect(cx, py2, cx + 1, py2 + gap);
          room = make_rect(nx1, py2 + gap, nx1 + w, py2 + gap + h);
        } else {
          corridor = make_rect(cx, py1 - gap, cx + 1, py1);
          room = make_rect(nx1, py1 - gap - h, nx1 + w, py1 - gap);
        }
      } else {
        long cy = rng_range(rng, py1 + 1, py2 - 2);
        long ny1 = rng_range(rng, cy + 2 - h, cy - 1);
        if (side == 1) {
          corridor = make_rect(px2, cy, px2 + gap, cy + 1);
          room = make_rect(px2 + gap, ny1, px2 + gap + w, ny1 + h);
        } else {
          corridor = make_rect(px1 - gap, cy, px1, cy + 1);
          room = make_rect(px1 - gap - w, ny1, px1 - gap, ny1 + h);
        }
      }
      if (!clear_of_all(room, all)) continue;
      if (!clear_of_all(corridor, all, {room_at[pi]})) continue;
      Corridor cr;
      cr.rect = corridor;
      cr.room_a = static_cast<int>(pi);
      cr.room_b = static_cast<int>(o.rooms.size());
      o.rooms.push_back(room);
      o.corridors.push_back(cr);
      room_at.push_back(all.size());
      all.push_back(room);
      all.push_back(corridor);
      placed = true;
    }
    if (!placed)
      throw std::runtime_error("gen_random_office: placement failed (seed " +
                               std::to_string(c.seed) + ")");
  }

  if (c.allow_holes && c.n_rooms >= 3) {
    auto linked = [&](int a, int b) {
      for (const auto& cr : o.corridors)
        if ((cr.room_a == a && cr.room_b == b) || (cr.room_a == b && cr.room_b == a))
          return true;
      return false;
    };
    int want = std::max(1, c.n_rooms / 5);
    int added = 0;
    for (std::size_t i = 0; i < o.rooms.size() && added < want; ++i)
      for (std::size_t j = i + 1; j < o.rooms.size() && added < want; ++j) {
        if (linked(static_cast<int>(i), static_cast<int>(j))) continue;
        const Rect &a = o.rooms[i], &b = o.rooms[j];
        // Vertical link: a below b (or b below a) with x-overlap.
        const Rect* lo = nullptr;
        const Rect* hi = nullptr;
        if (a.hi.y < b.lo.y) {
          lo = &a;
          hi = &b;
        } else if (b.hi.y < a.lo.y) {
          lo = &b;
          hi = &a;
        }
        if (lo) {
          long x1 = to_long(std::max(lo->lo.x, hi->lo.x)) + 1;
          long x2 = to_long(std::min(lo->hi.x, hi->hi.x)) - 2;
          for (long cx = x1; cx <= x2 && added < want; ++cx) {
            Rect cr = make_rect(cx, to_long(lo->hi.y), cx + 1, to_long(hi->lo.y));
            if (!clear_of_all(cr, all, {room_at[i], room_at[j]})) continue;
            Corridor nc;
            nc.rect = cr;
            nc.room_a = static_cast<int>(i);
            nc.room_b = static_cast<int>(j);
            o.corridors.push_back(nc);
            all.push_back(cr);
            ++added;
          }
          continue;
        }
        if (a.hi.x < b.lo.x) {
          lo = &a;
          hi = &b;
        } else if (b.hi.x < a.lo.x) {
          lo = &b;
          hi = &a;
        } else {
          continue;
        }
        long y1 = to_long(std::max(lo->lo.y, hi->lo.y)) + 1;
        long y2 = to_long(std::min(lo->hi.y, hi->hi.y)) - 2;
        for (long cy = y1; cy <= y2 && added < want; ++cy) {
          Rect cr = make_rect(to_long(lo->hi.x), cy, to_long(hi->lo.x), cy + 1);
          if (!clear_of_all(cr, all, {room_at[i], room_at[j]})) continue;
          Corridor nc;
          nc.rect = cr;
          nc.room_a = static_cast<int>(i);
          nc.room_b = static_cast<int>(j);
          o.corridors.push_back(nc);
          all.push_back(cr);
          ++added;
        }
      }
  }

  ValidationReport rep = validate_office(o);
  if (!rep.ok())
    throw std::runtime_error("gen_random_office produced an invalid office (seed " +
                             std::to_string(c.seed) + "):\n" + rep.to_string());
  return o;
}

OfficePolygon gen_packing(int c, const Rat& eps, const Rat& tau) {
  if (c < 1) throw std::invalid_argument("packing needs c >= 1");
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("packing needs eps in (0,1)");
  if (!(tau > 0 && tau < eps / 2))
    throw std::invalid_argument("packing needs tau in (0, eps/2)");

  const Rat half = rat(1, 2);
  const Rat quarter = rat(1, 4);
  auto xc = [&](int i) -> Rat { return Rat(i) * (1 + tau); };

  OfficePolygon o;
  // Room order: bottom 0, middle 1, top 2 (top only when an odd corridor
  // exists). Outer rooms are shallow and tight so that their corners stay
  // within 2+eps of every surviving guard set.
  int last = c - 1;
  int last_even = last - (last % 2 == 0 ? 0 : 1);
  int last_odd = last - (last % 2 == 1 ? 0 : 1);
  Rat bl = xc(0) - half - half, br = xc(last_even) + half + half;
  o.rooms.push_back(Rect{Point{bl, Rat(1)}, Point{br, rat(3, 2)}});
  Rat ml = xc(0) - half - quarter, mr = xc(last) + half + quarter;
  o.rooms.push_back(Rect{Point{ml, rat(5, 2)}, Point{mr, rat(7, 2)}});
  bool has_top = c >= 2;
  if (has_top) {
    Rat tl = xc(1) - half - half, tr = xc(last_odd) + half + half;
    o.rooms.push_back(Rect{Point{tl, rat(9, 2)}, Point{tr, Rat(5)}});
  }
  for (int i = 0; i < c; ++i) {
    Corridor cr;
    bool even = i % 2 == 0;
    Rat y0 = even ? rat(3, 2) : rat(7, 2);
    cr.rect = Rect{Point{xc(i) - half, y0}, Point{xc(i) + half, y0 + 1}};
    cr.room_a = even ? 0 : 1;
    cr.room_b = even ? 1 : 2;
    o.corridors.push_back(cr);
  }
  return o;
}

OfficePolygon gen_ratio_family(int k) {
  if (k < 2) throw std::invalid_argument("ratio family needs k >= 2");
  const long W = 2L * k * k + 4L * k + 1;
  // Vertical gap below room R_i (1-based, R_1 on top).
  auto gap = [&](int i) { return (i == 1 || i == k - 1) ? 2L : 1L; };
  std::vector<long> ybot(static_cast<std::size_t>(k) + 1);
  ybot[static_cast<std::size_t>(k)] = 0;
  for (int i = k - 1; i >= 1; --i)
    ybot[static_cast<std::size_t>(i)] = ybot[static_cast<std::size_t>(i) + 1] + 1 + gap(i);

  OfficePolygon o;
  for (int i = 1; i <= k; ++i)
    o.rooms.push_back(make_rect(0, ybot[static_cast<std::size_t>(i)], W,
                                ybot[static_cast<std::size_t>(i)] + 1));
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k; ++j) {
      Corridor cr;
      long x = 1 + static_cast<long>(j - 1) * (2L * k + 2);
      cr.rect = make_rect(x, ybot[static_cast<std::size_t>(i) + 1] + 1, x + 1,
                          ybot[static_cast<std::size_t>(i)]);
      cr.room_a = i - 1;  // R_i (above)
      cr.room_b = i;      // R_{i+1} (below)
      o.corridors.push_back(cr);
    }
  return o;
}

namespace {

long ratio_strip_x(int k, int j) { return 1 + static_cast<long>(j - 1) * (2L * k + 2); }

}  // namespace

std::vector<Point> ratio_cover_guards(int k) {
  OfficePolygon o = gen_ratio_family(k);
  std::vector<Point> g;
  for (int i = 1; i <= k; ++i) {
    long sx = ratio_strip_x(k, i);
    const Rect& room = o.rooms[static_cast<std::size_t>(i - 1)];
    // A vertex shared by strip i and room R_i: on the room's bottom edge for
    // i < k, on the top edge for i = k.
    Rat y = (i < k) ? room.lo.y : room.hi.y;
    g.push_back(Point{Rat(sx), y});
  }
  return g;
}

std::vector<Point> ratio_dispersed_guards(int k) {
  OfficePolygon o = gen_ratio_family(k);
  const Rect& top = o.rooms.front();
  const Rect& bottom = o.rooms.back();
  std::vector<Point> g;
  if (k == 2) {
    // Diagonal pair across the two strips.
    g.push_back(Point{Rat(ratio_strip_x(k, 1)), top.lo.y});
    g.push_back(Point{Rat(ratio_strip_x(k, 2) + 1), bottom.hi.y});
    return g;
  }
  for (int j = 1; j <= k; ++j) {
    long sx = ratio_strip_x(k, j);
    if (j % 2 == 1)
      g.push_back(Point{Rat(sx), top.lo.y});  // strip top-left
    else
      g.push_back(Point{Rat(sx), bottom.hi.y});  // strip bottom-left
  }
  for (int i = 2; i <= k - 1; ++i) {
    const Rect& room = o.rooms[static_cast<std::size_t>(i - 1)];
    g.push_back(Point{room.hi.x, room.hi.y});  // top-right corner
  }
  return g;
}

OfficePolygon gen_fig_disp3() {
  OfficePolygon o;
  o.rooms.push_back(make_rect(0, 0, 7, 1));
  o.rooms.push_back(make_rect(0, 2, 7, 3));
  for (long x : {1L, 3L, 5L}) {
    Corridor c;
    c.rect = make_rect(x, 1, x + 1, 2);
    c.room_a = 0;
    c.room_b = 1;
    o.corridors.push_back(c);
  }
  return o;
}

OfficePolygon office_affine(const OfficePolygon& o, const Rat& scale,
                            const Rat& dx, const Rat& dy) {
  if (!(scale > 0)) throw std::invalid_argument("scale must be positive");
  auto tp = [&](const Point& p) { return Point{p.x * scale + dx, p.y * scale + dy}; };
  OfficePolygon out = o;
  for (auto& r : out.rooms) r = Rect{tp(r.lo), tp(r.hi)};
  for (auto& c : out.corridors) c.rect = Rect{tp(c.rect.lo), tp(c.rect.hi)};
  return out;
}

Instance instance_from_office(const OfficePolygon& o) {
  Instance inst;
  inst.office = o;
  inst.poly = office_to_polygon(o);
  return inst;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

using nlohmann::json;

json coord_json(const Rat& r) {
  if (r.get_den() == 1 && rat_fits_int64(r)) return rat_to_int64(r);
  return rat_str(r);
}

Rat coord_parse(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    auto r = rat_parse(j.get<std::string>());
    if (r) return *r;
  }
  throw std::runtime_error("bad coordinate at " + where +
                           " (expected integer or \"a/b\")");
}

json point_json(const Point& p) { return json::array({coord_json(p.x), coord_json(p.y)}); }

Point point_parse(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("bad point at " + where + " (expected [x,y])");
  return Point{coord_parse(j[0], where + "[0]"), coord_parse(j[1], where + "[1]")};
}

json ring_json(const std::vector<Point>& ring) {
  json a = json::array();
  for (const auto& p : ring) a.push_back(point_json(p));
  return a;
}

std::vector<Point> ring_parse(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::runtime_error(where + " must be an array");
  std::vector<Point> ring;
  for (std::size_t i = 0; i < j.size(); ++i)
    ring.push_back(point_parse(j[i], where + "[" + std::to_string(i) + "]"));
  return ring;
}

json rect_json(const Rect& r) {
  return json::array(
      {coord_json(r.lo.x), coord_json(r.lo.y), coord_json(r.hi.x), coord_json(r.hi.y)});
}

Rect rect_parse(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4)
    throw std::runtime_error("bad rect at " + where + " (expected [x1,y1,x2,y2])");
  return Rect{Point{coord_parse(j[0], where), coord_parse(j[1], where)},
              Point{coord_parse(j[2], where), coord_parse(j[3], where)}};
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["outer"] = ring_json(inst.poly.outer);
  json holes = json::array();
  for (const auto& h : inst.poly.holes) holes.push_back(ring_json(h));
  j["holes"] = holes;
  if (inst.office) {
    json off;
    json rooms = json::array();
    for (const auto& r : inst.office->rooms) rooms.push_back(rect_json(r));
    off["rooms"] = rooms;
    json cs = json::array();
    for (const auto& c : inst.office->corridors)
      cs.push_back(json{{"rect", rect_json(c.rect)},
                        {"rooms", json::array({c.room_a, c.room_b})}});
    off["corridors"] = cs;
    j["office"] = off;
  }
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance parse error: ") + e.what());
  }
  Instance inst;
  if (j.contains("office")) {
    const json& off = j["office"];
    OfficePolygon o;
    if (!off.contains("rooms")) throw std::runtime_error("office.rooms missing");
    for (std::size_t i = 0; i < off["rooms"].size(); ++i)
      o.rooms.push_back(rect_parse(off["rooms"][i], "office.rooms[" + std::to_string(i) + "]"));
    if (off.contains("corridors"))
      for (std::size_t i = 0; i < off["corridors"].size(); ++i) {
        const json& cj = off["corridors"][i];
        const std::string where = "office.corridors[" + std::to_string(i) + "]";
        Corridor c;
        if (!cj.contains("rect") || !cj.contains("rooms") || !cj["rooms"].is_array() ||
            cj["rooms"].size() != 2)
          throw std::runtime_error(where + " needs rect and rooms:[i,j]");
        c.rect = rect_parse(cj["rect"], where + ".rect");
        c.room_a = cj["rooms"][0].get<int>();
        c.room_b = cj["rooms"][1].get<int>();
        o.corridors.push_back(c);
      }
    ValidationReport rep = validate_office(o);
    if (!rep.ok())
      throw std::runtime_error("invalid office in instance file:\n" + rep.to_string());
    inst.office = o;
    inst.poly = office_to_polygon(o);
    if (j.contains("outer")) {
      OrthoPolygon given;
      given.outer = ring_parse(j["outer"], "outer");
      if (j.contains("holes"))
        for (std::size_t h = 0; h < j["holes"].size(); ++h)
          given.holes.push_back(ring_parse(j["holes"][h], "holes[" + std::to_string(h) + "]"));
      if (given.outer != inst.poly.outer || given.holes != inst.poly.holes)
        throw std::runtime_error(
            "instance file: outer/holes do not match the office's boundary");
    }
    return inst;
  }
  if (!j.contains("outer")) throw std::runtime_error("instance file: outer missing");
  inst.poly.outer = ring_parse(j["outer"], "outer");
  if (j.contains("holes"))
    for (std::size_t h = 0; h < j["holes"].size(); ++h)
      inst.poly.holes.push_back(ring_parse(j["holes"][h], "holes[" + std::to_string(h) + "]"));
  ValidationReport rep = validate_ortho(inst.poly);
  if (!rep.ok())
    throw std::runtime_error("invalid polygon in instance file:\n" + rep.to_string());
  return inst;
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return instance_from_json(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst);
}

std::string solution_to_json(const Solution& sol) {
  json j;
  json gs = json::array();
  for (const auto& g : sol.guards) gs.push_back(point_json(g));
  j["guards"] = gs;
  if (sol.dispersion)
    j["dispersion"] = coord_json(*sol.dispersion);
  else
    j["dispersion"] = "inf";
  return j.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("solution parse error: ") + e.what());
  }
  Solution sol;
  if (!j.contains("guards")) throw std::runtime_error("solution: guards missing");
  for (std::size_t i = 0; i < j["guards"].size(); ++i)
    sol.guards.push_back(point_parse(j["guards"][i], "guards[" + std::to_string(i) + "]"));
  if (!j.contains("dispersion")) throw std::runtime_error("solution: dispersion missing");
  const json& d = j["dispersion"];
  if (d.is_string() && d.get<std::string>() == "inf")
    sol.dispersion = std::nullopt;
  else
    sol.dispersion = coord_parse(d, "dispersion");
  return sol;
}

Solution read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return solution_from_json(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_solution(const std::string& path, const Solution& sol) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << solution_to_json(sol);
}

}  // namespace dispgal
