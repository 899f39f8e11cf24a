#include "dispgal/sat.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dispgal::sat {

void Cnf::add_clause(std::vector<Lit> lits) {
  for (Lit l : lits) {
    int v = l < 0 ? -l : l;
    if (v == 0) throw std::invalid_argument("literal over variable 0");
    if (v > num_vars) num_vars = v;
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  clauses.push_back(std::move(lits));
}

namespace {

// Internal literal encoding: 2*(v-1) + (negative ? 1 : 0).
inline int enc(Lit l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
inline int neg(int el) { return el ^ 1; }
inline int var_of(int el) { return el >> 1; }

constexpr std::uint8_t KUndef = 2;

struct Solver {
  int nvars;
  std::vector<std::vector<int>> clauses;  // encoded literals
  std::vector<std::vector<int>> watches;  // per encoded literal: clause ids
  std::vector<std::uint8_t> assign;       // per var: 0 false, 1 true, 2 undef
  std::vector<std::uint8_t> phase;        // saved polarity
  std::vector<int> level;                 // per var
  std::vector<int> reason;                // per var: clause id or -1
  std::vector<int> trail;
  std::vector<int> trail_lim;
  std::size_t qhead = 0;
  std::vector<double> activity;
  double var_inc = 1.0;
  std::vector<std::uint8_t> seen;
  bool unsat_root = false;
  std::int64_t conflicts = 0;

  explicit Solver(int n) : nvars(n) {
    watches.assign(2 * static_cast<std::size_t>(n), {});
    assign.assign(n, KUndef);
    phase.assign(n, 0);
    level.assign(n, 0);
    reason.assign(n, -1);
    activity.assign(n, 0.0);
    seen.assign(n, 0);
  }

  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  std::uint8_t value(int el) const {
    std::uint8_t a = assign[var_of(el)];
    if (a == KUndef) return KUndef;
    return (el & 1) ? static_cast<std::uint8_t>(1 - a) : a;
  }

  void enqueue(int el, int why) {
    int v = var_of(el);
    assign[v] = (el & 1) ? 0 : 1;
    level[v] = decision_level();
    reason[v] = why;
    trail.push_back(el);
  }

  bool add_clause_internal(std::vector<int> c) {
    // Root-level simplification.
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] == neg(c[i + 1]) && var_of(c[i]) == var_of(c[i + 1])) return true;
    std::vector<int> out;
    for (int el : c) {
      std::uint8_t v = value(el);
      if (v == 1 && level[var_of(el)] == 0) return true;
      if (v == 0 && level[var_of(el)] == 0) continue;
      out.push_back(el);
    }
    if (out.empty()) {
      unsat_root = true;
      return false;
    }
    if (out.size() == 1) {
      if (value(out[0]) == 0) {
        unsat_root = true;
        return false;
      }
      if (value(out[0]) == KUndef) enqueue(out[0], -1);
      if (propagate() >= 0) {
        unsat_root = true;
        return false;
      }
      return true;
    }
    int id = static_cast<int>(clauses.size());
    clauses.push_back(out);
    watches[out[0]].push_back(id);
    watches[out[1]].push_back(id);
    return true;
  }

  // Returns conflicting clause id, or -1.
  int propagate() {
    while (qhead < trail.size()) {
      int el = trail[qhead++];
      int fl = neg(el);  // literal that became false
      auto& ws = watches[fl];
      std::size_t keep = 0;
      for (std::size_t k = 0; k < ws.size(); ++k) {
        int ci = ws[k];
        auto& c = clauses[ci];
        if (c[0] == fl) std::swap(c[0], c[1]);
        // c[1] == fl now (or the clause moved on earlier).
        if (value(c[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t t = 2; t < c.size(); ++t) {
          if (value(c[t]) != 0) {
            std::swap(c[1], c[t]);
            watches[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (value(c[0]) == 0) {
          // Conflict: restore remaining watches.
          for (std::size_t t = k + 1; t < ws.size(); ++t) ws[keep++] = ws[t];
          ws.resize(keep);
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(keep);
    }
    return -1;
  }

  void bump(int v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (auto& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
  }

  void backtrack(int lvl) {
    if (decision_level() <= lvl) return;
    std::size_t lim = static_cast<std::size_t>(trail_lim[lvl]);
    for (std::size_t k = trail.size(); k-- > lim;) {
      int v = var_of(trail[k]);
      phase[v] = assign[v];
      assign[v] = KUndef;
      reason[v] = -1;
    }
    trail.resize(lim);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  // First-UIP conflict analysis; returns (learnt clause, backtrack level).
  // Relies on every reason clause keeping its implied literal at slot 0.
  std::pair<std::vector<int>, int> analyze(int confl) {
    std::vector<int> learnt{0};  // slot 0 = asserting literal
    int pathc = 0;
    int el = -1;
    std::size_t index = trail.size();
    do {
      const auto& c = clauses[confl];
      for (std::size_t k = (el == -1 ? 0 : 1); k < c.size(); ++k) {
        int q = c[k];
        int v = var_of(q);
        if (!seen[v] && level[v] > 0) {
          seen[v] = 1;
          bump(v);
          if (level[v] == decision_level())
            ++pathc;
          else
            learnt.push_back(q);
        }
      }
      while (index > 0 && !seen[var_of(trail[index - 1])]) --index;
      --index;
      el = trail[index];
      seen[var_of(el)] = 0;
      confl = reason[var_of(el)];
      --pathc;
    } while (pathc > 0);
    learnt[0] = neg(el);

    // Clause minimization: drop literals implied by the rest.
    std::vector<int> minimized{learnt[0]};
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      int v = var_of(learnt[k]);
      int r = reason[v];
      bool redundant = false;
      if (r >= 0) {
        redundant = true;
        for (int q : clauses[r]) {
          if (q == neg(learnt[k]) || var_of(q) == v) continue;
          if (level[var_of(q)] > 0 && !seen[var_of(q)]) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) minimized.push_back(learnt[k]);
    }
    for (std::size_t k = 1; k < learnt.size(); ++k) seen[var_of(learnt[k])] = 0;

    int back = 0;
    if (minimized.size() > 1) {
      std::size_t best = 1;
      for (std::size_t k = 2; k < minimized.size(); ++k)
        if (level[var_of(minimized[k])] > level[var_of(minimized[best])]) best = k;
      std::swap(minimized[1], minimized[best]);
      back = level[var_of(minimized[1])];
    }
    return {minimized, back};
  }

  int pick_branch() {
    int best = -1;
    double besta = -1.0;
    for (int v = 0; v < nvars; ++v)
      if (assign[v] == KUndef && activity[v] > besta) {
        besta = activity[v];
        best = v;
      }
    return best;
  }

  static std::int64_t luby(std::int64_t i) {
    std::int64_t k = 1;
    while ((1ll << k) - 1 < i + 1) ++k;
    while ((1ll << k) - 1 != i + 1) {
      --k;
      i -= (1ll << k) - 1;
    }
    return 1ll << (k - 1);
  }

  Status run(std::int64_t max_conflicts) {
    if (unsat_root) return Status::unsat;
    if (propagate() >= 0) return Status::unsat;
    std::int64_t restart_idx = 0;
    std::int64_t budget = 64 * luby(restart_idx);
    std::int64_t since_restart = 0;
    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts;
        ++since_restart;
        if (decision_level() == 0) return Status::unsat;
        auto [learnt, back] = analyze(confl);
        backtrack(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int id = static_cast<int>(clauses.size());
          clauses.push_back(learnt);
          watches[learnt[0]].push_back(id);
          watches[learnt[1]].push_back(id);
          enqueue(learnt[0], id);
        }
        var_inc *= 1.0 / 0.95;
        if (max_conflicts > 0 && conflicts > max_conflicts)
          return Status::unknown;
        if (since_restart >= budget) {
          since_restart = 0;
          budget = 64 * luby(++restart_idx);
          backtrack(0);
        }
      } else {
        int v = pick_branch();
        if (v < 0) return Status::sat;
        trail_lim.push_back(static_cast<int>(trail.size()));
        enqueue(2 * v + (phase[v] == 1 ? 0 : 1), -1);
      }
    }
  }
};

Solver build_solver(const Cnf& f) {
  Solver s(std::max(f.num_vars, 1));
  for (const auto& cl : f.clauses) {
    if (cl.empty()) {
      s.unsat_root = true;
      break;
    }
    std::vector<int> enc_cl;
    enc_cl.reserve(cl.size());
    for (Lit l : cl) enc_cl.push_back(enc(l));
    if (!s.add_clause_internal(std::move(enc_cl))) break;
  }
  return s;
}

Model extract_model(const Solver& s, int num_vars) {
  Model m;
  m.value.assign(static_cast<std::size_t>(num_vars) + 1, 0);
  for (int v = 0; v < num_vars && v < s.nvars; ++v)
    m.value[static_cast<std::size_t>(v) + 1] = (s.assign[v] == 1) ? 1 : 0;
  return m;
}

}  // namespace

Result solve(const Cnf& f, const SolveLimits& limits) {
  Solver s = build_solver(f);
  Result r;
  r.status = s.run(limits.max_conflicts);
  if (r.status == Status::sat) {
    r.model = extract_model(s, f.num_vars);
    // Soundness: the model must satisfy every input clause.
    for (const auto& cl : f.clauses) {
      bool ok = false;
      for (Lit l : cl)
        if ((l > 0) == r.model[l > 0 ? l : -l]) {
          ok = true;
          break;
        }
      if (!ok) throw std::logic_error("sat: model does not satisfy the formula");
    }
  }
  return r;
}

long count_models(const Cnf& f, const std::vector<int>& projection, long cap) {
  Cnf work = f;
  std::vector<int> proj = projection;
  if (proj.empty())
    for (int v = 1; v <= f.num_vars; ++v) proj.push_back(v);
  long count = 0;
  while (cap <= 0 || count < cap) {
    Result r = solve(work);
    if (r.status == Status::unknown)
      throw std::runtime_error("count_models: budget exceeded");
    if (r.status == Status::unsat) break;
    ++count;
    std::vector<Lit> block;
    block.reserve(proj.size());
    for (int v : proj) block.push_back(r.model[v] ? -v : v);
    if (block.empty()) break;  // single empty projection: one model class
    work.add_clause(std::move(block));
  }
  return count;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf f;
  std::string line;
  std::vector<Lit> cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream is(line);
      std::string p, fmt;
      int nv = 0, nc = 0;
      is >> p >> fmt >> nv >> nc;
      f.num_vars = std::max(f.num_vars, nv);
      continue;
    }
    std::istringstream is(line);
    Lit l;
    while (is >> l) {
      if (l == 0) {
        f.add_clause(cur);
        cur.clear();
      } else {
        cur.push_back(l);
      }
    }
  }
  if (!cur.empty()) f.add_clause(cur);
  return f;
}

void write_dimacs(std::ostream& out, const Cnf& f) {
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& c : f.clauses) {
    for (Lit l : c) out << l << " ";
    out << "0\n";
  }
}

}  // namespace dispgal::sat
