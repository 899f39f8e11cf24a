#include "dispgal/dp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dispgal {

bool check_independent(const OfficeContext& oc) {
  const auto& grid = oc.ctx.grid;
  const auto& cells = oc.ctx.cells;
  const std::size_t nc = oc.corridors.size();
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      if (a == b) continue;
      const auto& cb = oc.corridors[b];
      int i0 = grid.x_index(cb.rect.lo.x), i1 = grid.x_index(cb.rect.hi.x);
      int j0 = grid.y_index(cb.rect.lo.y), j1 = grid.y_index(cb.rect.hi.y);
      const auto& ca = oc.corridors[a];
      for (int v : {ca.v_bl, ca.v_br, ca.v_tl, ca.v_tr})
        for (int j = j0; j < j1; ++j)
          for (int i = i0; i < i1; ++i) {
            int k = cells.cell_at[static_cast<std::size_t>(j) * (grid.nx - 1) + i];
            if (k >= 0 && cells.covers(static_cast<std::size_t>(k), v))
              return false;
          }
    }
  return true;
}

namespace {

// Distance access adapters: exact int64-scaled values when available,
// otherwise rationals. Both are exact.
struct ScaledView {
  const DistanceMatrix* m;
  std::int64_t operator()(int i, int j) const { return m->ds[i][j]; }
};
struct RatView {
  const DistanceMatrix* m;
  Rat operator()(int i, int j) const { return m->d[i][j]; }
};

template <class View>
class Engine {
 public:
  using S = decltype(std::declval<View>()(0, 0));

  struct Cfg {
    std::vector<int> guards;
    bool covers_parent = false;
    std::array<S, 2> dgate{};
  };
  struct Arm {
    std::array<int, 2> gates{};
    bool vertical = true;
    bool positive = true;
    Rat key;
    std::vector<Cfg> cfgs;
    std::vector<std::array<S, 4>> dcorner;  // per config, distance to corners
  };

  Engine(View d, S ell) : d_(d), ell_(ell) {}

  S cfg_vertex(const Cfg& c, const Arm& a, int v) const {
    S via0 = c.dgate[0] + d_(a.gates[0], v);
    S via1 = c.dgate[1] + d_(a.gates[1], v);
    return via0 < via1 ? via0 : via1;
  }

  // --- greedy selection over one axis ---------------------------------
  // arms: indices into `arms_view`, sorted along the axis; avail: candidate
  // config indices per arm, in smallness order.
  bool greedy(const std::vector<const Arm*>& arms,
              const std::vector<std::vector<int>>& avail,
              std::vector<int>& chosen) const {
    struct Ref {
      bool active = false;
      int gate = -1;
      S alpha{};
    };
    Ref ref_pos, ref_neg;
    chosen.assign(arms.size(), -1);
    for (std::size_t t = 0; t < arms.size(); ++t) {
      const Arm& a = *arms[t];
      int pick = -1;
      for (int idx : avail[t]) {
        const Cfg& c = a.cfgs[static_cast<std::size_t>(idx)];
        bool ok = true;
        for (const Ref* r : {&ref_pos, &ref_neg}) {
          if (!r->active) continue;
          S via0 = r->alpha + d_(r->gate, a.gates[0]) + c.dgate[0];
          S via1 = r->alpha + d_(r->gate, a.gates[1]) + c.dgate[1];
          if ((via0 < via1 ? via0 : via1) < ell_) {
            ok = false;
            break;
          }
        }
        if (ok) {
          pick = idx;
          break;
        }
      }
      if (pick < 0) return false;
      chosen[t] = pick;
      const Cfg& c = a.cfgs[static_cast<std::size_t>(pick)];
      // Fold the new selection into both running references.
      int rg = a.gates[1];
      S alpha = c.dgate[1];
      for (const Ref* r : {&ref_pos, &ref_neg})
        if (r->active) {
          S via = r->alpha + d_(r->gate, rg);
          if (via < alpha) alpha = via;
        }
      Ref& other = a.positive ? ref_neg : ref_pos;
      if (other.active) {
        S via = cfg_vertex(c, a, other.gate);
        if (via < other.alpha) other.alpha = via;
      }
      Ref& own = a.positive ? ref_pos : ref_neg;
      own = Ref{true, rg, alpha};
    }
    return true;
  }

  // --- independent set over both axes ----------------------------------
  // corners: BL, BR, TL, TR vertex ids of the room. Returns per-arm config
  // indices (aligned with `arms`), or nullopt.
  std::optional<std::vector<int>> select(
      const std::vector<Arm>& arms, const std::vector<std::vector<int>>& avail,
      const std::array<int, 4>& corners) const {
    (void)corners;
    std::vector<std::size_t> vids, hids;
    for (std::size_t i = 0; i < arms.size(); ++i)
      (arms[i].vertical ? vids : hids).push_back(i);
    auto by_key = [&](std::size_t x, std::size_t y) {
      return arms[x].key < arms[y].key;
    };
    std::sort(vids.begin(), vids.end(), by_key);
    std::sort(hids.begin(), hids.end(), by_key);

    // Probe values: distances from vertical-arm configs to the BL corner,
    // plus ell itself (covers the no-vertical-constraint case).
    std::set<S> probes{ell_};
    for (std::size_t i : vids)
      for (int idx : avail[i])
        probes.insert(arms[i].dcorner[static_cast<std::size_t>(idx)][0]);

    for (const S& p : probes) {
      std::vector<std::vector<int>> av(arms.size()), ah(arms.size());
      bool dead = false;
      for (std::size_t i : vids) {
        for (int idx : avail[i])
          if (!(arms[i].dcorner[static_cast<std::size_t>(idx)][0] < p))
            av[i].push_back(idx);
        if (av[i].empty()) dead = true;
      }
      for (std::size_t i : hids) {
        S cut = ell_ - p;
        for (int idx : avail[i])
          if (!(arms[i].dcorner[static_cast<std::size_t>(idx)][0] < cut))
            ah[i].push_back(idx);
        if (ah[i].empty()) dead = true;
      }
      if (dead) continue;

      for (;;) {
        std::vector<const Arm*> varms, harms;
        std::vector<std::vector<int>> vavail, havail;
        for (std::size_t i : vids) {
          varms.push_back(&arms[i]);
          vavail.push_back(av[i]);
        }
        for (std::size_t i : hids) {
          harms.push_back(&arms[i]);
          havail.push_back(ah[i]);
        }
        std::vector<int> vchosen, hchosen;
        if (!greedy(varms, vavail, vchosen)) break;
        if (!greedy(harms, havail, hchosen)) break;

        // Cross-axis conflicts route through the room corner matching the
        // two directions. corner index: BL=0, BR=1, TL=2, TR=3.
        struct Best {
          bool has = false;
          S dist{};
          std::size_t arm = 0;
          int cfg = -1;
        };
        // per corner, best (minimum) distance among matching selections
        std::array<Best, 4> vbest, hbest;
        auto feed = [&](std::array<Best, 4>& best, const std::vector<std::size_t>& ids,
                        const std::vector<int>& chosen) {
          for (std::size_t t = 0; t < ids.size(); ++t) {
            std::size_t i = ids[t];
            const auto& dc = arms[i].dcorner[static_cast<std::size_t>(chosen[t])];
            for (int corner = 0; corner < 4; ++corner) {
              bool matches;
              if (arms[i].vertical)
                matches = arms[i].positive ? (corner == 2 || corner == 3)
                                           : (corner == 0 || corner == 1);
              else
                matches = arms[i].positive ? (corner == 1 || corner == 3)
                                           : (corner == 0 || corner == 2);
              if (!matches) continue;
              if (!best[corner].has || dc[corner] < best[corner].dist)
                best[corner] = Best{true, dc[corner], i, chosen[t]};
            }
          }
        };
        feed(vbest, vids, vchosen);
        feed(hbest, hids, hchosen);

        int violated = -1;
        for (int corner : {3, 2, 1, 0}) {  // TR first: it aborts the probe
          if (vbest[corner].has && hbest[corner].has &&
              vbest[corner].dist + hbest[corner].dist < ell_) {
            violated = corner;
            break;
          }
        }
        if (violated < 0) {
          std::vector<int> out(arms.size(), -1);
          for (std::size_t t = 0; t < vids.size(); ++t) out[vids[t]] = vchosen[t];
          for (std::size_t t = 0; t < hids.size(); ++t) out[hids[t]] = hchosen[t];
          return out;
        }
        if (violated == 3) break;  // top x right: no solution for this probe
        if (violated == 2) {
          // top x left: discard the vertical (top) configuration
          auto& lst = av[vbest[2].arm];
          lst.erase(std::remove(lst.begin(), lst.end(), vbest[2].cfg), lst.end());
          if (lst.empty()) break;
        } else {
          // bottom x right / bottom x left: discard the horizontal one
          auto& lst = ah[hbest[violated].arm];
          lst.erase(std::remove(lst.begin(), lst.end(), hbest[violated].cfg),
                    lst.end());
          if (lst.empty()) break;
        }
      }
    }
    return std::nullopt;
  }

  View d_;
  S ell_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Test-facing wrappers over exact rationals.

namespace dp_detail {

namespace {

using REngine = Engine<RatView>;

REngine::Arm convert_arm(const Arm& in, const DistanceMatrix& D,
                         const std::array<int, 4>& corners) {
  REngine::Arm a;
  a.gates = in.gates;
  a.vertical = in.vertical;
  a.positive = in.positive;
  a.key = in.order_key;
  for (const auto& c : in.configs) {
    REngine::Cfg cc;
    cc.guards = c.guards;
    cc.covers_parent = c.covers_parent;
    cc.dgate = {c.dgate[0], c.dgate[1]};
    a.cfgs.push_back(std::move(cc));
    std::array<Rat, 4> dc;
    for (int k = 0; k < 4; ++k)
      dc[static_cast<std::size_t>(k)] =
          std::min(c.dgate[0] + D.d[in.gates[0]][corners[static_cast<std::size_t>(k)]],
                   c.dgate[1] + D.d[in.gates[1]][corners[static_cast<std::size_t>(k)]]);
    a.dcorner.push_back(dc);
  }
  return a;
}

// Candidate order: smaller first (larger far-gate distance), ties by guards.
std::vector<int> smallness_order(const REngine::Arm& a) {
  std::vector<int> idx(a.cfgs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    const auto& cx = a.cfgs[static_cast<std::size_t>(x)];
    const auto& cy = a.cfgs[static_cast<std::size_t>(y)];
    if (cx.dgate[1] != cy.dgate[1]) return cx.dgate[1] > cy.dgate[1];
    return cx.guards < cy.guards;
  });
  return idx;
}

}  // namespace

std::optional<std::vector<int>> greedy_select(const DistanceMatrix& D,
                                              const std::vector<Arm>& arms,
                                              const Rat& ell) {
  if (arms.empty()) return std::vector<int>{};
  std::array<int, 4> corners{0, 0, 0, 0};  // unused by the greedy pass
  REngine eng(RatView{&D}, ell);
  std::vector<REngine::Arm> conv;
  for (const auto& a : arms) conv.push_back(convert_arm(a, D, corners));
  std::vector<std::size_t> order(conv.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return conv[x].key < conv[y].key; });
  std::vector<const REngine::Arm*> ptrs;
  std::vector<std::vector<int>> avail;
  for (std::size_t i : order) {
    ptrs.push_back(&conv[i]);
    avail.push_back(smallness_order(conv[i]));
  }
  std::vector<int> chosen;
  if (!eng.greedy(ptrs, avail, chosen)) return std::nullopt;
  std::vector<int> out(arms.size(), -1);
  for (std::size_t t = 0; t < order.size(); ++t) out[order[t]] = chosen[t];
  return out;
}

std::optional<std::vector<int>> independent_set(const DistanceMatrix& D,
                                                const std::vector<Arm>& arms,
                                                const std::array<int, 4>& corners,
                                                const Rat& ell) {
  REngine eng(RatView{&D}, ell);
  std::vector<REngine::Arm> conv;
  std::vector<std::vector<int>> avail;
  for (const auto& a : arms) {
    conv.push_back(convert_arm(a, D, corners));
    avail.push_back(smallness_order(conv.back()));
  }
  return eng.select(conv, avail, corners);
}

std::optional<MaxGateResult> max_gate_selection(const DistanceMatrix& D,
                                                const std::vector<Arm>& arms,
                                                const std::array<int, 4>& corners,
                                                const Rat& ell, int blue_vertex) {
  REngine eng(RatView{&D}, ell);
  std::vector<REngine::Arm> conv;
  std::vector<std::vector<int>> avail;
  for (const auto& a : arms) {
    conv.push_back(convert_arm(a, D, corners));
    avail.push_back(smallness_order(conv.back()));
  }
  std::set<Rat> cand;
  for (std::size_t i = 0; i < conv.size(); ++i)
    for (int idx : avail[i])
      cand.insert(eng.cfg_vertex(conv[i].cfgs[static_cast<std::size_t>(idx)],
                                 conv[i], blue_vertex));
  if (cand.empty()) {
    auto sel = eng.select(conv, avail, corners);
    if (!sel) return std::nullopt;
    return MaxGateResult{Rat(0), *sel};
  }
  std::vector<Rat> cs(cand.begin(), cand.end());
  auto feasible = [&](const Rat& t, std::vector<int>& sel_out) {
    std::vector<std::vector<int>> f(conv.size());
    for (std::size_t i = 0; i < conv.size(); ++i) {
      for (int idx : avail[i])
        if (!(eng.cfg_vertex(conv[i].cfgs[static_cast<std::size_t>(idx)], conv[i],
                             blue_vertex) < t))
          f[i].push_back(idx);
      if (f[i].empty()) return false;
    }
    auto sel = eng.select(conv, f, corners);
    if (!sel) return false;
    sel_out = *sel;
    return true;
  };
  std::vector<int> sel;
  if (!feasible(cs.front(), sel)) return std::nullopt;
  std::size_t lo = 0, hi = cs.size() - 1;
  std::vector<int> tmp;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo + 1) / 2;
    if (feasible(cs[mid], tmp)) {
      lo = mid;
      sel = tmp;
    } else {
      hi = mid - 1;
    }
  }
  return MaxGateResult{cs[lo], sel};
}

}  // namespace dp_detail

// ---------------------------------------------------------------------------
// The dynamic program proper.

namespace {

struct TreeShape {
  std::vector<int> parent;            // room -> parent room (-1 at root)
  std::vector<int> parent_corridor;   // room -> corridor to parent (-1)
  std::vector<std::vector<std::pair<int, int>>> children;  // (child, corridor)
  std::vector<int> postorder;
};

TreeShape build_tree(const OfficeContext& oc) {
  const std::size_t n = oc.office.rooms.size();
  TreeShape t;
  t.parent.assign(n, -2);
  t.parent_corridor.assign(n, -1);
  t.children.assign(n, {});
  std::vector<int> stack{0};
  t.parent[0] = -1;
  std::vector<int> order;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    order.push_back(r);
    for (std::size_t ci = 0; ci < oc.corridors.size(); ++ci) {
      const auto& c = oc.corridors[ci];
      int other = -1;
      if (c.low_room == r) other = c.high_room;
      if (c.high_room == r) other = c.low_room;
      if (other < 0 || t.parent[static_cast<std::size_t>(other)] != -2) continue;
      t.parent[static_cast<std::size_t>(other)] = r;
      t.parent_corridor[static_cast<std::size_t>(other)] = static_cast<int>(ci);
      t.children[static_cast<std::size_t>(r)].push_back({other, static_cast<int>(ci)});
      stack.push_back(other);
    }
  }
  // children-first order
  t.postorder = order;
  std::reverse(t.postorder.begin(), t.postorder.end());
  return t;
}

// Vertex pair of corridor `c` on the side of `room` ([left,right]/[bottom,top]).
std::array<int, 2> corridor_pair(const OfficeContext::CorridorInfo& c, int room) {
  if (c.vertical)
    return room == c.low_room ? std::array<int, 2>{c.v_bl, c.v_br}
                              : std::array<int, 2>{c.v_tl, c.v_tr};
  return room == c.low_room ? std::array<int, 2>{c.v_bl, c.v_tl}
                            : std::array<int, 2>{c.v_br, c.v_tr};
}

template <class View>
class Dp {
 public:
  using E = Engine<View>;
  using S = typename E::S;

  Dp(const OfficeContext& oc, View d, S ell)
      : oc_(oc), eng_(d, ell), d_(d), ell_(ell), tree_(build_tree(oc)) {}

  std::optional<std::vector<int>> run() {
    configsets_.assign(oc_.office.rooms.size(), {});
    for (int v : tree_.postorder) {
      if (tree_.parent[static_cast<std::size_t>(v)] < 0) return process_root(v);
      if (!process_node(v)) return std::nullopt;  // empty configuration set
    }
    throw std::logic_error("dp: no root processed");
  }

 private:
  using Cfg = typename E::Cfg;
  using Arm = typename E::Arm;

  std::vector<Arm> build_arms(int v) {
    std::vector<Arm> arms;
    for (auto [child, ci] : tree_.children[static_cast<std::size_t>(v)]) {
      const auto& c = oc_.corridors[static_cast<std::size_t>(ci)];
      Arm a;
      a.gates = corridor_pair(c, v);
      a.vertical = c.vertical;
      a.positive = (v == c.low_room);
      a.key = c.vertical ? c.rect.lo.x : c.rect.lo.y;
      a.cfgs = configsets_[static_cast<std::size_t>(child)];
      const auto corners = oc_.room_corners[static_cast<std::size_t>(v)];
      for (const auto& cfg : a.cfgs) {
        std::array<S, 4> dc;
        for (int k = 0; k < 4; ++k)
          dc[static_cast<std::size_t>(k)] = eng_.cfg_vertex(cfg, a, corners[static_cast<std::size_t>(k)]);
        a.dcorner.push_back(dc);
      }
      arms.push_back(std::move(a));
    }
    return arms;
  }

  std::vector<std::vector<int>> smallness_avail(const std::vector<Arm>& arms) {
    std::vector<std::vector<int>> avail;
    for (const auto& a : arms) {
      std::vector<int> idx(a.cfgs.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
      std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        const auto& cx = a.cfgs[static_cast<std::size_t>(x)];
        const auto& cy = a.cfgs[static_cast<std::size_t>(y)];
        if (cx.dgate[1] != cy.dgate[1]) return cx.dgate[1] > cy.dgate[1];
        return cx.guards < cy.guards;
      });
      avail.push_back(std::move(idx));
    }
    return avail;
  }

  bool pair_ok(int a, int b) const { return !(d_(a, b) < ell_); }

  // Placements on the parent corridor and the corners of R_v. Each placement
  // has one or two corridor guards (two only on different sides), at most
  // one corner guard, and is internally ell-feasible.
  std::vector<std::vector<int>> placements(const std::array<int, 2>& child,
                                           const std::array<int, 2>& gates,
                                           const std::array<int, 4>& corners) {
    std::vector<std::vector<int>> xs;
    for (int q : {child[0], child[1], gates[0], gates[1]}) xs.push_back({q});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (pair_ok(child[static_cast<std::size_t>(i)], gates[static_cast<std::size_t>(j)]))
          xs.push_back({child[static_cast<std::size_t>(i)], gates[static_cast<std::size_t>(j)]});
    for (int q : {child[0], child[1], gates[0], gates[1]})
      for (int m : corners)
        if (pair_ok(q, m)) xs.push_back({q, m});
    return xs;
  }

  // One configuration per placement: the child-branch selection maximizing
  // the minimum distance to the designated gate vertex.
  bool process_node(int v) {
    int pc = tree_.parent_corridor[static_cast<std::size_t>(v)];
    const auto& c = oc_.corridors[static_cast<std::size_t>(pc)];
    int w = tree_.parent[static_cast<std::size_t>(v)];
    auto child_pair = corridor_pair(c, v);
    auto gate_pair = corridor_pair(c, w);
    const auto corners = oc_.room_corners[static_cast<std::size_t>(v)];

    std::vector<Arm> arms = build_arms(v);
    auto base_avail = smallness_avail(arms);

    auto& out = configsets_[static_cast<std::size_t>(v)];
    for (const auto& X : placements(child_pair, gate_pair, corners)) {
      bool covers_rv = false;
      for (int x : X)
        if (x == child_pair[0] || x == child_pair[1] || x == corners[0] ||
            x == corners[1] || x == corners[2] || x == corners[3])
          covers_rv = true;

      // Child configurations compatible with X.
      std::vector<std::vector<int>> avail(arms.size());
      bool arm_dead = false;
      for (std::size_t i = 0; i < arms.size(); ++i) {
        for (int idx : base_avail[i]) {
          const Cfg& cfg = arms[i].cfgs[static_cast<std::size_t>(idx)];
          bool ok = true;
          for (int x : X)
            if (eng_.cfg_vertex(cfg, arms[i], x) < ell_) {
              ok = false;
              break;
            }
          if (ok) avail[i].push_back(idx);
        }
        if (avail[i].empty()) arm_dead = true;
      }
      if (arm_dead) continue;

      // Designated gate: the parent-side gate nearest to X (skipped for the
      // diagonal two-guard placement).
      int blue = -1;
      bool diagonal = X.size() == 2 &&
                      ((X[0] == child_pair[0] && X[1] == gate_pair[1]) ||
                       (X[0] == child_pair[1] && X[1] == gate_pair[0]));
      if (!diagonal) {
        S d0 = d_(gate_pair[0], X[0]), d1 = d_(gate_pair[1], X[0]);
        for (int x : X) {
          S a0 = d_(gate_pair[0], x), a1 = d_(gate_pair[1], x);
          if (a0 < d0) d0 = a0;
          if (a1 < d1) d1 = a1;
        }
        blue = d1 < d0 ? gate_pair[1] : gate_pair[0];
      }

      // Coverage of R_v: from X, or from a child configuration fixed at a
      // gate vertex of its branch; probe every option.
      struct Fix {
        int arm = -1, cfg = -1;
      };
      std::vector<Fix> fixes;
      if (covers_rv) {
        fixes.push_back({});
      } else {
        for (std::size_t i = 0; i < arms.size(); ++i)
          for (int idx : avail[i])
            if (arms[i].cfgs[static_cast<std::size_t>(idx)].covers_parent)
              fixes.push_back({static_cast<int>(i), idx});
        if (fixes.empty()) continue;
      }

      bool have_best = false;
      bool best_unbounded = false;
      S best_t{};
      std::vector<int> best_sel;
      for (const Fix& fx : fixes) {
        auto av = avail;
        if (fx.arm >= 0) av[static_cast<std::size_t>(fx.arm)] = {fx.cfg};

        if (blue < 0 || arms.empty()) {
          auto sel = eng_.select(arms, av, corners);
          if (sel && !have_best) {
            have_best = true;
            best_unbounded = arms.empty();
            best_t = S{};
            best_sel = *sel;
          }
          continue;
        }
        // Candidate values for the blue-distance maximization.
        std::set<S> cand;
        for (std::size_t i = 0; i < arms.size(); ++i)
          for (int idx : av[i])
            cand.insert(eng_.cfg_vertex(arms[i].cfgs[static_cast<std::size_t>(idx)],
                                        arms[i], blue));
        std::vector<S> cs(cand.begin(), cand.end());
        auto feasible = [&](const S& t,
                            std::vector<int>& sel_out) {
          std::vector<std::vector<int>> f(arms.size());
          bool dead = false;
          for (std::size_t i = 0; i < arms.size(); ++i) {
            for (int idx : av[i])
              if (!(eng_.cfg_vertex(arms[i].cfgs[static_cast<std::size_t>(idx)],
                                    arms[i], blue) < t))
                f[i].push_back(idx);
            if (f[i].empty()) dead = true;
          }
          if (dead) return false;
          auto sel = eng_.select(arms, f, corners);
          if (!sel) return false;
          sel_out = *sel;
          return true;
        };
        std::vector<int> sel;
        if (!feasible(cs.front(), sel)) continue;
        std::size_t lo = 0, hi = cs.size() - 1;  // cs[lo] feasible
        std::vector<int> sel_hi;
        while (lo < hi) {
          std::size_t mid = lo + (hi - lo + 1) / 2;
          if (feasible(cs[mid], sel_hi)) {
            lo = mid;
            sel = sel_hi;
          } else {
            hi = mid - 1;
          }
        }
        if (!have_best || (!best_unbounded && best_t < cs[lo])) {
          have_best = true;
          best_t = cs[lo];
          best_sel = sel;
        }
      }
      if (!have_best) continue;

      Cfg cfg;
      cfg.guards = X;
      for (std::size_t i = 0; i < arms.size(); ++i) {
        const auto& picked = arms[i].cfgs[static_cast<std::size_t>(best_sel[i])];
        cfg.guards.insert(cfg.guards.end(), picked.guards.begin(),
                          picked.guards.end());
      }
      std::sort(cfg.guards.begin(), cfg.guards.end());
      cfg.guards.erase(std::unique(cfg.guards.begin(), cfg.guards.end()),
                       cfg.guards.end());
      cfg.covers_parent = false;
      for (int x : X)
        if (x == gate_pair[0] || x == gate_pair[1]) cfg.covers_parent = true;
      for (int k = 0; k < 2; ++k) {
        bool first = true;
        for (int g : cfg.guards) {
          S dg = d_(g, gate_pair[static_cast<std::size_t>(k)]);
          if (first || dg < cfg.dgate[static_cast<std::size_t>(k)]) {
            cfg.dgate[static_cast<std::size_t>(k)] = dg;
            first = false;
          }
        }
      }
      out.push_back(std::move(cfg));
    }
    return !out.empty();
  }

  std::optional<std::vector<int>> process_root(int v) {
    const auto corners = oc_.room_corners[static_cast<std::size_t>(v)];
    std::vector<Arm> arms = build_arms(v);
    auto base_avail = smallness_avail(arms);

    std::vector<std::vector<int>> xs{{}};
    for (int m : corners) xs.push_back({m});
    for (const auto& X : xs) {
      std::vector<std::vector<int>> avail(arms.size());
      bool arm_dead = false;
      for (std::size_t i = 0; i < arms.size(); ++i) {
        for (int idx : base_avail[i]) {
          const Cfg& cfg = arms[i].cfgs[static_cast<std::size_t>(idx)];
          bool ok = true;
          for (int x : X)
            if (eng_.cfg_vertex(cfg, arms[i], x) < ell_) {
              ok = false;
              break;
            }
          if (ok) avail[i].push_back(idx);
        }
        if (avail[i].empty()) arm_dead = true;
      }
      if (arm_dead) continue;

      struct Fix {
        int arm = -1, cfg = -1;
      };
      std::vector<Fix> fixes;
      if (!X.empty()) {
        fixes.push_back({});
      } else {
        for (std::size_t i = 0; i < arms.size(); ++i)
          for (int idx : avail[i])
            if (arms[i].cfgs[static_cast<std::size_t>(idx)].covers_parent)
              fixes.push_back({static_cast<int>(i), idx});
        if (fixes.empty()) continue;
      }
      for (const Fix& fx : fixes) {
        auto av = avail;
        if (fx.arm >= 0) av[static_cast<std::size_t>(fx.arm)] = {fx.cfg};
        auto sel = eng_.select(arms, av, corners);
        if (!sel) continue;
        std::vector<int> guards = X;
        for (std::size_t i = 0; i < arms.size(); ++i) {
          const auto& picked = arms[i].cfgs[static_cast<std::size_t>((*sel)[i])];
          guards.insert(guards.end(), picked.guards.begin(), picked.guards.end());
        }
        std::sort(guards.begin(), guards.end());
        guards.erase(std::unique(guards.begin(), guards.end()), guards.end());
        return guards;
      }
    }
    return std::nullopt;
  }

  const OfficeContext& oc_;
  E eng_;
  View d_;
  S ell_;
  TreeShape tree_;
  std::vector<std::vector<Cfg>> configsets_;
};

void check_preconditions(const OfficeContext& oc) {
  if (!oc.ctx.poly.holes.empty() ||
      oc.office.corridors.size() + 1 != oc.office.rooms.size())
    throw std::invalid_argument("DP preconditions violated: polygon has holes");
  if (!check_independent(oc))
    throw std::invalid_argument("DP preconditions violated: dependent corridors");
}

}  // namespace

std::optional<Solution> decide_dp(const OfficeContext& oc, const Rat& ell) {
  check_preconditions(oc);
  std::optional<std::vector<int>> ids;
  bool scaled = false;
  if (oc.ctx.dist.has_scaled) {
    Rat b = ell * Rat(static_cast<long>(oc.ctx.dist.scale));
    if (b.get_den() == 1 && rat_fits_int64(b)) {
      Dp<ScaledView> dp(oc, ScaledView{&oc.ctx.dist}, rat_to_int64(b));
      ids = dp.run();
      scaled = true;
    }
  }
  if (!scaled) {
    Dp<RatView> dp(oc, RatView{&oc.ctx.dist}, ell);
    ids = dp.run();
  }
  if (!ids) return std::nullopt;
  Solution sol;
  for (int id : *ids) sol.guards.push_back(oc.vpoint(id));
  sol.dispersion = realized_dispersion(oc.ctx.dist, sol.guards);
  if (dispersion_less(sol.dispersion, ell))
    throw std::logic_error("decide_dp: realized dispersion below probe");
  return sol;
}

Solution max_dispersion_dp(const OfficeContext& oc) {
  check_preconditions(oc);
  if (oc.office.corridors.empty()) {
    Solution sol;
    sol.guards.push_back(oc.vpoint(oc.room_corners[0][0]));
    sol.dispersion = std::nullopt;
    return sol;
  }
  std::set<Rat> cand_set;
  const std::size_t n = oc.ctx.vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cand_set.insert(oc.ctx.dist.d[i][j]);
  std::vector<Rat> cand(cand_set.begin(), cand_set.end());

  auto first = decide_dp(oc, cand.front());
  if (!first) throw std::logic_error("max_dispersion_dp: smallest probe failed");
  Solution best = *first;
  std::size_t lo, hi = cand.size();
  {
    auto it = std::upper_bound(cand.begin(), cand.end(), *best.dispersion);
    lo = static_cast<std::size_t>(it - cand.begin());
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto probe = decide_dp(oc, cand[mid]);
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

Solution max_dispersion_dp(const OfficePolygon& o) {
  return max_dispersion_dp(build_office_context(o));
}

}  // namespace dispgal
