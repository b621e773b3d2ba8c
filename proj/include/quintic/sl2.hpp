#pragma once

#include <map>
#include <string>
#include <vector>

// Finite-dimensional SL2 representation bookkeeping: a representation is a
// multiset of irreducibles Sym^k, tracked as highest-weight -> multiplicity.
// Everything is decided on weight multisets, so equalities are exact.

namespace quintic::sl2 {

struct Rep {
  std::map<int, int, std::greater<int>> mult;  // highest weight -> count > 0

  int dim() const;
  // All torus weights with multiplicity, sorted descending.
  std::vector<int> character() const;
  std::string str() const;  // e.g. "Sym^4 + 3*Sym^2 + Sym^0"

  bool operator==(const Rep& o) const { return mult == o.mult; }
  bool operator!=(const Rep& o) const { return mult != o.mult; }
};

Rep irrep(int highest, int multiplicity = 1);

Rep operator+(const Rep& a, const Rep& b);
// Virtual differences are not representable; throws when a multiplicity
// would go negative.
Rep operator-(const Rep& a, const Rep& b);

// Clebsch-Gordan: Sym^a (x) Sym^b = Sym^(a+b) + Sym^(a+b-2) + ... + Sym^|a-b|.
Rep tensor(const Rep& a, const Rep& b);

// k-th symmetric power, computed on weights: one weight per size-k multiset
// of weights of v, then recognized as a sum of irreducibles.
Rep sym_power(const Rep& v, int k);

// Recognize a symmetric weight multiset as a representation by greedily
// peeling the largest remaining weight. Throws naming the first weight that
// fails to cancel.
Rep decompose_weights(std::vector<int> weights);

// The slice at the double-quadric locus: coordinates transform as
// W = Sym^2 + Sym^0, quintics as Sym^5(W), and the slice is what remains of
// the quintics after removing the form itself and the orbit directions
// (adjoint of the ambient group minus the stabilizer sl2).
struct SliceReport {
  Rep coordinates;  // W, dim 4
  Rep quintics;     // Sym^5(W), dim 56
  Rep adjoint;      // W (x) W minus a trace, dim 15
  Rep orbit;        // adjoint minus the stabilizer, dim 12
  Rep slice;        // quintics minus form minus orbit, dim 43
  Rep expected;     // Sym^5 (x) Sym^5 + Sym^6
  bool matches_expected = false;
};

SliceReport slice_report();

}  // namespace quintic::sl2
