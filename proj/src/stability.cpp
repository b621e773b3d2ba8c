#include "quintic/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quintic {

std::int64_t mu(const OneParamSubgroup& lambda, const MonomialConfiguration& cfg) {
  if (cfg.support.empty()) throw std::invalid_argument("mu of an empty configuration");
  std::int64_t best = weight_pairing(lambda, cfg.support[0]);
  for (std::size_t i = 1; i < cfg.support.size(); ++i)
    best = std::min(best, weight_pairing(lambda, cfg.support[i]));
  return best;
}

TorusVerdict torus_verdict(const MonomialConfiguration& cfg) {
  switch (hull_membership(centroid(cfg.degree), cfg).position) {
    case HullPosition::Inside: return TorusVerdict::Stable;
    case HullPosition::Boundary: return TorusVerdict::StrictlySemistable;
    case HullPosition::Outside: return TorusVerdict::Unstable;
  }
  throw std::logic_error("unreachable");
}

Monomial apply_permutation(const std::array<int, 4>& perm, const Monomial& m) {
  Monomial out;
  for (int j = 0; j < 4; ++j) out.e[j] = m.e[perm[j]];
  return out;
}

MonomialConfiguration apply_permutation(const std::array<int, 4>& perm,
                                        const MonomialConfiguration& cfg) {
  std::vector<Monomial> ms;
  ms.reserve(cfg.support.size());
  for (const auto& m : cfg.support) ms.push_back(apply_permutation(perm, m));
  return MonomialConfiguration::from_monomials(cfg.degree, std::move(ms));
}

std::optional<Certificate> nonstable_certificate(const MonomialConfiguration& cfg,
                                                 const std::vector<CriticalRecord>& records) {
  if (records.empty()) throw std::invalid_argument("certificate search needs critical records");
  for (const auto& r : records)
    if (r.nonneg.degree != cfg.degree)
      throw std::invalid_argument("critical records are for a different degree");

  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    // containment of the permuted support in each record's M+
    for (std::size_t k = 0; k < records.size(); ++k) {
      bool inside = true;
      for (const auto& m : cfg.support) {
        if (weight_pairing(records[k].lambda, apply_permutation(perm, m)) < 0) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      Certificate c;
      c.permutation = perm;
      c.record_index = k;
      c.lambda = records[k].lambda;
      c.mu_value = mu(records[k].lambda, apply_permutation(perm, cfg));
      return c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

using IVec = std::array<std::int64_t, 4>;

std::int64_t idot(const IVec& a, const IVec& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Rational rdot(const std::array<Rational, 4>& a, const IVec& b) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * Rational(static_cast<long>(b[i]));
  return s;
}

// q = projection of the origin onto conv(candidate face); accepted iff q lies
// in the sub-simplex and sees every point on its far side (the variational
// characterization of the nearest point, so acceptance is exact optimality).
std::optional<std::array<Rational, 4>> try_face(const std::vector<IVec>& pts,
                                                const std::vector<std::size_t>& face) {
  std::array<Rational, 4> q{};
  if (face.size() == 1) {
    for (int i = 0; i < 4; ++i) q[i] = Rational(static_cast<long>(pts[face[0]][i]));
  } else if (face.size() == 2) {
    IVec u{};
    for (int i = 0; i < 4; ++i) u[i] = pts[face[1]][i] - pts[face[0]][i];
    std::int64_t uu = idot(u, u);
    if (uu == 0) return std::nullopt;
    Rational tpar(-idot(pts[face[0]], u), uu);
    tpar.canonicalize();
    if (tpar < 0 || tpar > 1) return std::nullopt;
    for (int i = 0; i < 4; ++i)
      q[i] = Rational(static_cast<long>(pts[face[0]][i])) +
             tpar * Rational(static_cast<long>(u[i]));
  } else {
    IVec u{}, v{};
    for (int i = 0; i < 4; ++i) {
      u[i] = pts[face[1]][i] - pts[face[0]][i];
      v[i] = pts[face[2]][i] - pts[face[0]][i];
    }
    // Gram system for  argmin |x0 + s u + t v|^2
    std::int64_t uu = idot(u, u), uv = idot(u, v), vv = idot(v, v);
    std::int64_t det = uu * vv - uv * uv;
    if (det == 0) return std::nullopt;  // affinely dependent triple
    std::int64_t bu = -idot(pts[face[0]], u), bv = -idot(pts[face[0]], v);
    Rational s(bu * vv - bv * uv, det), tpar(uu * bv - uv * bu, det);
    s.canonicalize();
    tpar.canonicalize();
    if (s < 0 || tpar < 0 || s + tpar > 1) return std::nullopt;
    for (int i = 0; i < 4; ++i)
      q[i] = Rational(static_cast<long>(pts[face[0]][i])) +
             s * Rational(static_cast<long>(u[i])) +
             tpar * Rational(static_cast<long>(v[i]));
  }

  Rational qq = 0;
  for (int i = 0; i < 4; ++i) qq += q[i] * q[i];
  if (qq == 0) return std::nullopt;  // origin inside: not an Unstable configuration
  for (const auto& p : pts)
    if (rdot(q, p) < qq) return std::nullopt;  // q.(p - q) >= 0 must hold for all p
  return q;
}

}  // namespace

std::optional<WorstDirection> worst_1ps(const MonomialConfiguration& cfg) {
  if (torus_verdict(cfg) != TorusVerdict::Unstable) return std::nullopt;

  // shifted support, scaled by 4 to clear the barycenter's denominator
  const int d = cfg.degree;
  std::vector<IVec> pts;
  pts.reserve(cfg.support.size());
  for (const auto& m : cfg.support)
    pts.push_back({4 * m.e[0] - d, 4 * m.e[1] - d, 4 * m.e[2] - d, 4 * m.e[3] - d});

  const std::size_t n = pts.size();
  std::optional<std::array<Rational, 4>> q;
  for (std::size_t i = 0; i < n && !q; ++i)
    q = try_face(pts, {i});
  for (std::size_t i = 0; i < n && !q; ++i)
    for (std::size_t j = i + 1; j < n && !q; ++j)
      q = try_face(pts, {i, j});
  for (std::size_t i = 0; i < n && !q; ++i)
    for (std::size_t j = i + 1; j < n && !q; ++j)
      for (std::size_t k = j + 1; k < n && !q; ++k)
        q = try_face(pts, {i, j, k});
  if (!q)
    throw std::logic_error("nearest point not found on any face");  // faces of a 3-polytope
                                                                    // have at most 3 affinely
                                                                    // independent vertices

  // primitive direction with positive scale; undo the factor-4 scaling in the
  // squared ratio (distance was computed on 4 * (m - barycenter))
  mpz_class l = 1;
  for (const auto& c : *q) l = l / gcd(l, c.get_den()) * c.get_den();
  std::array<std::int64_t, 4> dir{};
  mpz_class g = 0;
  for (int i = 0; i < 4; ++i) {
    mpz_class z = (*q)[i].get_num() * (l / (*q)[i].get_den());
    g = gcd(g, z);
    dir[i] = z.get_si();
  }
  for (auto& c : dir) c /= g.get_si();

  Rational qq = 0;
  for (int i = 0; i < 4; ++i) qq += (*q)[i] * (*q)[i];
  WorstDirection out;
  out.lambda = OneParamSubgroup(dir);
  out.squared_ratio = qq / 16;
  out.squared_ratio.canonicalize();
  return out;
}

KempfFlag kempf_flag(const OneParamSubgroup& lambda) {
  if (!lambda.is_sorted_primitive())
    throw std::invalid_argument("flag is defined for normalized subgroups");
  KempfFlag f;
  if (lambda.a[0] > lambda.a[1]) f.plane = 0;
  if (lambda.a[1] > lambda.a[2]) f.line = std::make_pair(0, 1);
  if (lambda.a[2] > lambda.a[3]) f.point = 3;
  f.partial = !(f.plane && f.line && f.point);
  return f;
}

StabilityReport analyze_stability(const MonomialConfiguration& cfg,
                                  const std::vector<CriticalRecord>& records) {
  StabilityReport rep;
  rep.degree = cfg.degree;
  rep.cfg = cfg;
  rep.hull = hull_membership(centroid(cfg.degree), cfg);
  switch (rep.hull.position) {
    case HullPosition::Inside: rep.verdict = TorusVerdict::Stable; break;
    case HullPosition::Boundary: rep.verdict = TorusVerdict::StrictlySemistable; break;
    case HullPosition::Outside: rep.verdict = TorusVerdict::Unstable; break;
  }
  rep.certificate = nonstable_certificate(cfg, records);
  rep.worst = worst_1ps(cfg);
  if (rep.certificate)
    rep.flag = kempf_flag(rep.certificate->lambda);
  else if (rep.worst)
    rep.flag = kempf_flag(rep.worst->lambda.normalize());
  return rep;
}

const char* verdict_name(TorusVerdict v) {
  switch (v) {
    case TorusVerdict::Stable: return "Stable";
    case TorusVerdict::StrictlySemistable: return "StrictlySemistable";
    case TorusVerdict::Unstable: return "Unstable";
  }
  return "?";
}

}  // namespace quintic
