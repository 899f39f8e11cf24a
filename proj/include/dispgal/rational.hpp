#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace dispgal {

// Exact rational scalar. All geometry in this project is exact; no floating
// point enters any predicate or distance.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Parses "5", "-3", "5/3", "-7/4". Denominator must be positive and nonzero.
std::optional<Rat> rat_parse(const std::string& s);

// Emits "5" for integers, "a/b" otherwise (lowest terms, positive denominator).
std::string rat_str(const Rat& r);

// True if r is an integer that fits in int64.
bool rat_fits_int64(const Rat& r);
std::int64_t rat_to_int64(const Rat& r);

}  // namespace dispgal
