#include "quintic/luna.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

std::vector<std::int64_t> adjoint_weights(const OneParamSubgroup& lambda) {
  std::vector<std::int64_t> w;
  w.reserve(15);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) w.push_back(lambda.a[i] - lambda.a[j]);
  w.push_back(0);  // Cartan directions
  w.push_back(0);
  w.push_back(0);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

std::vector<std::int64_t> normal_weights(const OneParamSubgroup& lambda, int d) {
  std::multiset<std::int64_t> bag;
  for (const Monomial& m : enumerate_monomials(d))
    bag.insert(-weight_pairing(lambda, m));

  // Euler direction: the invariant form itself.
  auto it = bag.find(0);
  if (it == bag.end())
    throw std::runtime_error("slice weights: no invariant monomial under " +
                             lambda.str());
  bag.erase(it);

  // Orbit directions: adjoint minus the subgroup direction itself. The other
  // centralizer zeros are genuine tangent moves and must cancel against
  // invariant monomial directions.
  std::vector<std::int64_t> adj = adjoint_weights(lambda);
  bool dropped_zero = false;
  for (std::int64_t w : adj) {
    if (w == 0 && !dropped_zero) {
      dropped_zero = true;
      continue;
    }
    auto pos = bag.find(w);
    if (pos == bag.end()) {
      std::ostringstream os;
      os << "slice weights: orbit direction of weight " << w
         << " does not embed for " << lambda.str() << " at degree " << d;
      throw std::runtime_error(os.str());
    }
    bag.erase(pos);
  }

  return std::vector<std::int64_t>(bag.rbegin(), bag.rend());
}

KirwanFiber kirwan_fiber(const OneParamSubgroup& lambda, int d) {
  KirwanFiber f;
  for (std::int64_t w : normal_weights(lambda, d)) {
    if (w > 0)
      f.positive.push_back(w);
    else if (w < 0)
      f.negative.push_back(-w);
    else
      ++f.zero_count;
  }
  std::sort(f.positive.begin(), f.positive.end(), std::greater<>());
  std::sort(f.negative.begin(), f.negative.end(), std::greater<>());
  return f;
}

int centralizer_dim(const OneParamSubgroup& lambda) {
  int dim = -1;
  std::set<std::int64_t> seen;
  for (int i = 0; i < 4; ++i) {
    if (!seen.insert(lambda.a[i]).second) continue;
    int n = 0;
    for (int j = 0; j < 4; ++j)
      if (lambda.a[j] == lambda.a[i]) ++n;
    dim += n * n;
  }
  return dim;
}

namespace {

// Deterministic small rational draw; avoids the unspecified stdlib
// distributions so identical seeds give identical samples everywhere.
Rational draw_coeff(std::mt19937_64& rng) {
  std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
  if (num == 0) num = 1;
  std::int64_t den = static_cast<std::int64_t>(rng() % 29) + 1;
  return make_rational(num, den);
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
  const std::size_t nr = rows.size();
  if (nr == 0) return 0;
  const std::size_t nc = rows[0].size();
  int rank = 0;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    std::size_t piv = lead;
    while (piv < nr && rows[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[lead], rows[piv]);
    const Rational inv = 1 / rows[lead][c];
    for (std::size_t j = c; j < nc; ++j) rows[lead][j] *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t j = c; j < nc; ++j) rows[r][j] -= f * rows[lead][j];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

// Rank of the linearized centralizer action (plus the line through F) at a
// sample form with the given coefficients on the zero set.
int orbit_matrix_rank(const OneParamSubgroup& lambda,
                      const std::vector<Monomial>& zs,
                      const std::vector<Rational>& coeff) {
  const std::size_t n = zs.size();
  auto index_of = [&](const Monomial& m) -> std::ptrdiff_t {
    for (std::size_t k = 0; k < n; ++k)
      if (zs[k] == m) return static_cast<std::ptrdiff_t>(k);
    return -1;
  };

  std::vector<std::vector<Rational>> rows;

  // Off-diagonal centralizer directions x_j d/dx_i (needs a_i = a_j, so the
  // image stays inside the zero weight space).
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || lambda.a[i] != lambda.a[j]) continue;
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t k = 0; k < n; ++k) {
        if (zs[k].e[i] == 0) continue;
        Monomial img = zs[k];
        img.e[i] -= 1;
        img.e[j] += 1;
        const std::ptrdiff_t t = index_of(img);
        if (t < 0) continue;  // cannot happen: weight is preserved
        row[static_cast<std::size_t>(t)] += Rational(zs[k].e[i]) * coeff[k];
      }
      rows.push_back(std::move(row));
    }
  }

  // Traceless diagonal directions: scale monomial m by <t, m>.
  static const int tdiag[3][4] = {
      {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
  for (const auto& t : tdiag) {
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t s = 0;
      for (int i = 0; i < 4; ++i) s += static_cast<std::int64_t>(t[i]) * zs[k].e[i];
      row[k] = Rational(static_cast<long>(s)) * coeff[k];
    }
    rows.push_back(std::move(row));
  }

  // The form itself: orbit rank is taken inside projective space.
  rows.push_back(coeff);

  return exact_rank(std::move(rows));
}

}  // namespace

BoundaryDimEstimate boundary_dim(const OneParamSubgroup& lambda, int d,
                                 std::uint64_t seed) {
  const MonomialConfiguration zs = zero_set(lambda, d);
  const std::size_t n = zs.support.size();

  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::uint64_t s =
        seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
    int rank[2] = {0, 0};
    for (int half = 0; half < 2; ++half) {
      std::mt19937_64 rng(half == 0 ? s : (s ^ 0xD1B54A32D192ED03ull));
      std::vector<Rational> coeff(n);
      for (std::size_t k = 0; k < n; ++k) coeff[k] = draw_coeff(rng);
      rank[half] = orbit_matrix_rank(lambda, zs.support, coeff);
    }
    if (rank[0] != rank[1]) continue;  // degenerate draw; resample

    BoundaryDimEstimate est;
    est.orbit_rank = rank[0] - 1;
    est.dim_estimate = static_cast<int>(n) - 1 - est.orbit_rank;
    est.seed = s;
    return est;
  }
  throw std::runtime_error("boundary dimension: rank did not stabilize for " +
                           lambda.str());
}

BoundaryReport boundary_report(const CriticalRecord& record, int d,
                               std::uint64_t seed) {
  static const std::pair<int, int> known[] = {
      {1, 6}, {2, 1}, {3, 0}, {4, 1}, {5, 1}, {6, 0}};

  BoundaryReport rep;
  rep.lambda = record.lambda;
  rep.degree = d;
  rep.label = quintic_label(record.lambda);
  rep.zero = record.zero;
  rep.centralizer = centralizer_dim(record.lambda);
  rep.fiber = kirwan_fiber(record.lambda, d);
  rep.dims = boundary_dim(record.lambda, d, seed);
  for (const auto& [lab, dim] : known) {
    if (d == 5 && rep.label == lab) {
      rep.reference_dim = dim;
      rep.dim_mismatch = (rep.dims.dim_estimate != dim);
      break;
    }
  }
  return rep;
}

}  // namespace quintic
