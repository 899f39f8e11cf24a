#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace dispgal::sat {

// Literal: +v / -v over 1-based variables, DIMACS style.
using Lit = int;

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;

  int new_var() { return ++num_vars; }
  void add_clause(std::vector<Lit> lits);
  std::size_t clause_count() const { return clauses.size(); }
};

struct Model {
  std::vector<std::uint8_t> value;  // index 1..num_vars
  bool operator[](int var) const { return value[static_cast<std::size_t>(var)] != 0; }
};

enum class Status { sat, unsat, unknown };

struct Result {
  Status status = Status::unknown;
  Model model;
  bool sat() const { return status == Status::sat; }
};

struct SolveLimits {
  // Conflict budget; 0 = unlimited. Exceeding it yields Status::unknown.
  std::int64_t max_conflicts = 0;
};

// Complete, deterministic CDCL decision procedure (two watched literals,
// first-UIP learning, activity branching, phase saving, Luby restarts).
Result solve(const Cnf& f, const SolveLimits& limits = {});

// Number of distinct satisfying assignments restricted to the projection
// variables, counted by iterative solving with blocking clauses; stops at
// cap. An empty projection means all variables.
long count_models(const Cnf& f, const std::vector<int>& projection, long cap);

// DIMACS text import/export (debugging aid).
Cnf parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Cnf& f);

}  // namespace dispgal::sat
