#pragma once

#include <cstdint>
#include <vector>

#include "quintic/rational.hpp"

// Numerical invariants: geometric genus of the quasihomogeneous tangent-cone
// singularity by lattice count and by closed form, hypersurface geometric
// genus, and log-canonical-threshold bounds from weight systems.

namespace quintic {

// Non-negative solutions of i0+i1+i2+i3 = d with 2*i0+i1+i2 <= d-4; the
// weighted-multiplicity constraint of the genus computation for weights
// (2,1,1). Requires d >= 4.
std::int64_t genus_count(int d);

// Parity-split closed form: d(d-2)(4d-10)/48 for even d,
// (d-1)(d-3)(4d-2)/48 for odd d. Throws logic_error when the division is not
// exact (a transcription bug, not an input error). Requires d >= 4.
std::int64_t genus_closed_form(int d);

// (d-1)(d-2)(d-3)/6 for a smooth degree-d surface. Requires d >= 1.
std::int64_t hypersurface_pg(int d);

struct WeightSystem {
  std::vector<Rational> weights;  // all positive, each <= weighted_degree
  Rational weighted_degree;       // positive

  WeightSystem(std::vector<Rational> w, Rational degree);
};

// min(1, sum of weights / weighted degree), exact.
Rational lct_weight_bound(const WeightSystem& ws);

enum class LctVerdict { Stable, Semistable, NoConclusion };

// lct > 4/5 forces stability and lct = 4/5 semistability; below the
// threshold nothing follows (the converse direction fails).
LctVerdict lct_verdict(const Rational& lct);

const char* lct_verdict_name(LctVerdict v);

}  // namespace quintic
