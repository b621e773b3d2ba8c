#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace quintic {

// Exact rational scalar used on every verdict path. GMP keeps simplex pivoting
// and projection arithmetic overflow-free; bounded integer work stays int64.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace quintic
