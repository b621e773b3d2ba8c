#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quintic/critical.hpp"
#include "quintic/lattice.hpp"

// Local structure of the quotient along a closed orbit fixed by a critical
// subgroup: weights of the Luna slice (the normal to the orbit inside the
// space of degree-d forms), the Kirwan fiber decomposition, and an exact-rank
// estimate of the boundary stratum dimension.

namespace quintic {

// Weights of the adjoint representation restricted to the lambda-torus:
// the twelve differences a_i - a_j (i != j) plus three Cartan zeros.
std::vector<std::int64_t> adjoint_weights(const OneParamSubgroup& lambda);

// Torus weights of the slice at a lambda-invariant form: the action on a
// coefficient direction m is by -<lambda, m> (dual to the action on
// coordinates), so the slice multiset is
//   { -<lambda, m> } minus one 0 (Euler) minus (adjoint minus one 0).
// The single removed adjoint zero is the lambda direction itself; remaining
// centralizer zeros stay, they are honest orbit directions. Throws when the
// subtraction underflows (the orbit directions must embed in the tangent
// space) or when no invariant monomial exists.
std::vector<std::int64_t> normal_weights(const OneParamSubgroup& lambda, int d);

struct KirwanFiber {
  std::vector<std::int64_t> positive;  // sorted descending
  std::vector<std::int64_t> negative;  // absolute values, sorted descending
  std::size_t zero_count = 0;
};

KirwanFiber kirwan_fiber(const OneParamSubgroup& lambda, int d);

// dim of the centralizer of the lambda-torus in SL4: sum of squared weight
// multiplicities minus one.
int centralizer_dim(const OneParamSubgroup& lambda);

struct BoundaryDimEstimate {
  int orbit_rank = 0;    // rank of the linearized centralizer action mod the form
  int dim_estimate = 0;  // (|zero set| - 1) - orbit_rank
  std::uint64_t seed = 0;  // seed that produced the accepted sample
};

// Dimension of the stratum of lambda-invariant forms modulo the centralizer,
// estimated at a pseudo-random rational form F supported on the zero set:
// rank of { x_j dF/dx_i : a_i = a_j } plus the traceless diagonal directions,
// modulo the line through F. A sample is accepted only when an independent
// second draw reproduces the rank; retries a few seeds before giving up.
BoundaryDimEstimate boundary_dim(const OneParamSubgroup& lambda, int d,
                                 std::uint64_t seed = 20240501);

struct BoundaryReport {
  OneParamSubgroup lambda;
  int degree = 0;
  int label = 0;  // conventional degree-5 index, 0 otherwise
  MonomialConfiguration zero;
  int centralizer = 0;
  KirwanFiber fiber;
  BoundaryDimEstimate dims;
  std::optional<int> reference_dim;  // previously reported stratum dimension
  bool dim_mismatch = false;         // estimate disagrees with reference_dim
};

// Report for one boundary-kind critical record.
BoundaryReport boundary_report(const CriticalRecord& record, int d,
                               std::uint64_t seed = 20240501);

}  // namespace quintic
