#include "quintic/hull.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quintic {

namespace {

constexpr int kRows = 4;  // three coordinates + the affine row

struct Phase1Result {
  bool feasible = false;
  std::vector<Rational> x;           // barycentric coefficients when feasible
  std::array<Rational, kRows> farkas{};  // y with y.col <= 0 for all columns, y.b > 0
};

// Exact phase-1 simplex for  sum_j col_j * x_j = b, x >= 0.  Bland's rule on
// both the entering and leaving choice guarantees termination without any
// lexicographic machinery; every entry stays a GMP rational.
Phase1Result phase1(std::vector<std::array<Rational, kRows>> cols,
                    std::array<Rational, kRows> b) {
  const int n = static_cast<int>(cols.size());
  std::array<int, kRows> sign{};
  for (int i = 0; i < kRows; ++i) {
    sign[i] = (b[i] < 0) ? -1 : 1;
    if (sign[i] < 0) {
      b[i] = -b[i];
      for (auto& c : cols) c[i] = -c[i];
    }
  }

  const int total = n + kRows;  // original columns then one artificial per row
  std::vector<std::vector<Rational>> T(kRows, std::vector<Rational>(total));
  std::vector<Rational> rhs(kRows);
  std::array<int, kRows> basis{};
  for (int i = 0; i < kRows; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = cols[j][i];
    T[i][n + i] = 1;
    rhs[i] = b[i];
    basis[i] = n + i;
  }
  // reduced costs for min(sum of artificials); initial y = (1,...,1)
  std::vector<Rational> red(total);
  for (int j = 0; j < total; ++j) {
    Rational s = 0;
    for (int i = 0; i < kRows; ++i) s += T[i][j];
    red[j] = (j < n ? Rational(0) : Rational(1)) - s;
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (red[j] < 0) { enter = j; break; }  // Bland: smallest index
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < kRows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0)
      throw std::logic_error("phase-1 simplex became unbounded");  // cannot happen: objective >= 0

    Rational piv = T[leave][enter];
    for (int j = 0; j < total; ++j) T[leave][j] /= piv;
    rhs[leave] /= piv;
    for (int i = 0; i < kRows; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j < total; ++j) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    Rational f = red[enter];
    if (f != 0)
      for (int j = 0; j < total; ++j) red[j] -= f * T[leave][j];
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (int i = 0; i < kRows; ++i)
    if (basis[i] >= n) objective += rhs[i];

  Phase1Result out;
  if (objective == 0) {
    out.feasible = true;
    out.x.assign(n, Rational(0));
    for (int i = 0; i < kRows; ++i)
      if (basis[i] < n) out.x[basis[i]] = rhs[i];
  } else {
    // optimal dual: y_k = 1 - reduced cost of artificial k, undo the row flips
    for (int i = 0; i < kRows; ++i) {
      Rational y = Rational(1) - red[n + i];
      out.farkas[i] = sign[i] < 0 ? Rational(-y) : y;
    }
  }
  return out;
}

// Primitive integer vector proportional to a rational 4-vector (same sign).
std::array<std::int64_t, 4> to_primitive(const std::array<Rational, 4>& v) {
  mpz_class l = 1;
  for (const auto& q : v) l = l / gcd(l, q.get_den()) * q.get_den();
  std::array<mpz_class, 4> w;
  mpz_class g = 0;
  for (int i = 0; i < 4; ++i) {
    w[i] = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, w[i]);
  }
  if (g == 0) throw std::logic_error("zero functional cannot be made primitive");
  std::array<std::int64_t, 4> out{};
  for (int i = 0; i < 4; ++i) {
    w[i] /= g;
    if (!w[i].fits_slong_p()) throw std::logic_error("functional does not fit 64 bits");
    out[i] = w[i].get_si();
  }
  return out;
}

// Primitive sum-zero integer vector orthogonal to every row; empty optional
// when the rows already span all functionals vanishing nowhere (rank 4).
std::optional<std::array<std::int64_t, 4>> kernel_vector(
    std::vector<std::array<Rational, 4>> rows) {
  rows.push_back({1, 1, 1, 1});  // restrict to the sum-zero functional space
  int rank = 0;
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    Rational p = rows[rank][col];
    for (int c = 0; c < 4; ++c) rows[rank][c] /= p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int c = 0; c < 4; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank >= 4) return std::nullopt;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.begin() + rank, free_col) !=
         pivot_col.begin() + rank)
    ++free_col;
  std::array<Rational, 4> v{};
  v[free_col] = 1;
  for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free_col];
  return to_primitive(v);
}

// Sum-zero normal orthogonal to two integer difference vectors: signed 3x3
// minors of the rows (1,1,1,1), u, v. Zero when u, v span less than a plane.
std::array<std::int64_t, 4> triple_normal(const std::array<std::int64_t, 4>& u,
                                          const std::array<std::int64_t, 4>& v) {
  std::array<std::int64_t, 4> nu{};
  int s = 1;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<int, 3> c{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != skip) c[k++] = i;
    std::int64_t det = (u[c[1]] * v[c[2]] - u[c[2]] * v[c[1]]) -
                       (u[c[0]] * v[c[2]] - u[c[2]] * v[c[0]]) +
                       (u[c[0]] * v[c[1]] - u[c[1]] * v[c[0]]);
    nu[skip] = s * det;
    s = -s;
  }
  return nu;
}

OneParamSubgroup subgroup_from(const std::array<std::int64_t, 4>& w) {
  std::int64_t g = 0;
  for (auto v : w) g = std::gcd(g, v < 0 ? -v : v);
  std::array<std::int64_t, 4> out = w;
  for (auto& v : out) v /= g;
  return OneParamSubgroup(out);
}

}  // namespace

HullVerdict hull_membership(const std::array<Rational, 4>& p_in,
                            const MonomialConfiguration& cfg) {
  std::array<Rational, 4> p = p_in;
  for (auto& c : p) c.canonicalize();  // callers may pass unreduced fractions
  Rational coord_sum = p[0] + p[1] + p[2] + p[3];
  if (coord_sum != cfg.degree)
    throw std::invalid_argument("query point must lie on the degree-" +
                                std::to_string(cfg.degree) + " simplex plane");

  const auto& S = cfg.support;
  const int n = static_cast<int>(S.size());

  std::vector<std::array<Rational, kRows>> cols;
  cols.reserve(n);
  for (const auto& m : S)
    cols.push_back({Rational(m.e[0]), Rational(m.e[1]), Rational(m.e[2]), Rational(1)});
  Phase1Result lp = phase1(std::move(cols), {p[0], p[1], p[2], Rational(1)});

  HullVerdict out;
  if (!lp.feasible) {
    // Farkas functional g(x) = y0 x0 + y1 x1 + y2 x2 + (y3/d) * sum(x) has
    // g <= 0 on the support and g(p) > 0; projected to sum-zero and flipped it
    // strictly separates with positive weights on the support side.
    const auto& y = lp.farkas;
    Rational shift = Rational(static_cast<long>(cfg.degree));
    std::array<Rational, 4> lam;
    for (int i = 0; i < 4; ++i) lam[i] = (i < 3 ? y[i] : Rational(0)) + y[3] / shift;
    Rational avg = (lam[0] + lam[1] + lam[2] + lam[3]) / 4;
    for (auto& c : lam) c = avg - c;  // project and flip in one step
    out.position = HullPosition::Outside;
    out.hyperplane = subgroup_from(to_primitive(lam));
    return out;
  }

  out.barycentric = lp.x;

  // scale the query point to integers for the facet search
  mpz_class lz = 1;
  for (const auto& q : p) lz = lz / gcd(lz, q.get_den()) * q.get_den();
  if (!lz.fits_slong_p() || lz.get_si() > 1000000)
    throw std::invalid_argument("query point denominator too large");
  const std::int64_t L = lz.get_si();
  std::array<std::int64_t, 4> P{};
  for (int i = 0; i < 4; ++i)
    P[i] = mpz_class(p[i].get_num() * (L / p[i].get_den())).get_si();

  // affine rank of the support
  std::vector<std::array<Rational, 4>> diffs;
  for (int j = 1; j < n; ++j) {
    std::array<Rational, 4> dvec;
    for (int i = 0; i < 4; ++i) dvec[i] = Rational(S[j].e[i] - S[0].e[i]);
    diffs.push_back(dvec);
  }
  if (auto nu = kernel_vector(diffs)) {
    // hull spans at most a plane inside the simplex plane: every point of it,
    // p included, lies on the supporting hyperplane normal to nu
    out.position = HullPosition::Boundary;
    out.hyperplane = subgroup_from(*nu);
    return out;
  }

  // full-dimensional hull: p is interior unless some facet passes through it
  for (int i = 0; i < n; ++i) {
    std::array<std::int64_t, 4> base{};
    for (int c = 0; c < 4; ++c) base[c] = static_cast<std::int64_t>(L) * S[i].e[c] - P[c];
    for (int j = i + 1; j < n; ++j) {
      std::array<std::int64_t, 4> u{};
      for (int c = 0; c < 4; ++c) u[c] = S[j].e[c] - S[i].e[c];
      for (int k = j + 1; k < n; ++k) {
        std::array<std::int64_t, 4> v{};
        for (int c = 0; c < 4; ++c) v[c] = S[k].e[c] - S[i].e[c];
        auto nu = triple_normal(u, v);
        if (nu == std::array<std::int64_t, 4>{0, 0, 0, 0}) continue;
        std::int64_t at_p = 0;
        for (int c = 0; c < 4; ++c) at_p += nu[c] * base[c];
        if (at_p != 0) continue;  // hyperplane misses p
        bool nonneg = true, nonpos = true;
        for (int t = 0; t < n && (nonneg || nonpos); ++t) {
          std::int64_t s = 0;
          for (int c = 0; c < 4; ++c)
            s += nu[c] * (static_cast<std::int64_t>(L) * S[t].e[c] - P[c]);
          if (s < 0) nonneg = false;
          if (s > 0) nonpos = false;
        }
        if (!nonneg && !nonpos) continue;  // cuts through the hull
        if (nonpos)
          for (auto& c : nu) c = -c;
        out.position = HullPosition::Boundary;
        out.hyperplane = subgroup_from(nu);
        return out;
      }
    }
  }

  out.position = HullPosition::Inside;
  return out;
}

const char* hull_position_name(HullPosition p) {
  switch (p) {
    case HullPosition::Inside: return "Inside";
    case HullPosition::Boundary: return "Boundary";
    case HullPosition::Outside: return "Outside";
  }
  return "?";
}

}  // namespace quintic
