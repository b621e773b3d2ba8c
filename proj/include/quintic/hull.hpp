#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quintic/lattice.hpp"
#include "quintic/rational.hpp"

// Exact convex-hull membership on the degree-d exponent simplex. The verdict
// drives every stability decision, so all arithmetic is rational: feasibility
// comes from a phase-1 simplex with Bland's rule, witnesses are re-checkable
// barycentric coefficients or an integral (sum-zero, primitive) functional.

namespace quintic {

enum class HullPosition { Inside, Boundary, Outside };

struct HullVerdict {
  HullPosition position = HullPosition::Outside;
  // Inside/Boundary: coefficients aligned with cfg.support, >= 0, sum 1,
  // combining the support points to the query point exactly.
  std::vector<Rational> barycentric;
  // Outside: min_m <h, m - p> > 0. Boundary: <h, m - p> >= 0 for all m with
  // minimum 0 (supporting hyperplane through p). Sum-zero and primitive.
  std::optional<OneParamSubgroup> hyperplane;
};

// Position of a rational point (coordinate sum = cfg.degree) relative to the
// hull of the configuration, within the 3-dimensional simplex plane. Inside
// means relative interior with respect to that full plane, so configurations
// spanning a lower-dimensional hull can only be Boundary or Outside.
HullVerdict hull_membership(const std::array<Rational, 4>& p, const MonomialConfiguration& cfg);

const char* hull_position_name(HullPosition p);

}  // namespace quintic
