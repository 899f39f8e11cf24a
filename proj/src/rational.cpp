#include "dispgal/rational.hpp"

#include <limits>

namespace dispgal {

std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n;
      if (n.set_str(s, 10) != 0) return std::nullopt;
      return Rat(n);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    mpz_class n, d;
    if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0) return std::nullopt;
    if (d <= 0) return std::nullopt;
    Rat r(n, d);
    r.canonicalize();
    return r;
  } catch (...) {
    return std::nullopt;
  }
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rat_fits_int64(const Rat& r) {
  if (r.get_den() != 1) return false;
  static const mpz_class lo(std::numeric_limits<std::int64_t>::min());
  static const mpz_class hi(std::numeric_limits<std::int64_t>::max());
  return r.get_num() >= lo && r.get_num() <= hi;
}

std::int64_t rat_to_int64(const Rat& r) {
  // Callers check rat_fits_int64 first; long is 64-bit on this platform.
  return static_cast<std::int64_t>(r.get_num().get_si());
}

}  // namespace dispgal
