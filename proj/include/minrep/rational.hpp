#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minrep {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Parse "p", "p/q", "-p/q" or a finite decimal such as "2.5".
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rat& r);

/// p/q in lowest terms. mpq_class(p, q) alone does not canonicalize.
inline Rat frac(long p, long q)
{
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// True iff r - base is a nonnegative integer.
inline bool in_shifted_naturals(const Rat& r, const Rat& base)
{
  Rat d = r - base;
  return is_integer(d) && sgn(d) >= 0;
}

/// True iff r - base is a nonpositive integer, i.e. r in base - N.
inline bool in_shifted_neg_naturals(const Rat& r, const Rat& base)
{
  Rat d = base - r;
  return is_integer(d) && sgn(d) >= 0;
}

inline Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace minrep
