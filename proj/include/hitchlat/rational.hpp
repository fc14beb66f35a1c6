#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hitchlat {

// Exact rational scalar. Every quantity in this library is a rational
// number and every check is an exact equality, so nothing here ever
// touches floating point.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p". Canonicalizes sign and gcd.
inline Rat rat_from_string(const std::string& s) {
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical rendering: "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q))
    throw std::domain_error("not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p())
    throw std::domain_error("integer out of long range: " + q.get_str());
  return q.get_num().get_si();
}

}  // namespace hitchlat
