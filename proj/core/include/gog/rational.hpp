#ifndef GOG_RATIONAL_HPP
#define GOG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "gog/errors.hpp"

namespace gog {

/// Exact scalar used throughout the verdict path.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q". Throws input_error on anything else.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw input_error("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw input_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// mpq_class(p, q) keeps the raw pair; this puts it in lowest terms, which
/// the arithmetic operators assume.
inline Rat make_rat(long num, long den) {
  if (den == 0) throw input_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace gog

#endif
