#include "quintic/invariants.hpp"

#include <stdexcept>

namespace quintic {

std::int64_t genus_count(int d) {
  if (d < 4) throw std::invalid_argument("genus_count requires degree >= 4");
  std::int64_t count = 0;
  for (int i0 = 0; 2 * i0 <= d - 4; ++i0)
    for (int i1 = 0; i1 <= d; ++i1)
      for (int i2 = 0; i2 <= d; ++i2) {
        const int i3 = d - i0 - i1 - i2;
        if (i3 < 0) break;
        if (2 * i0 + i1 + i2 <= d - 4) ++count;
      }
  return count;
}

std::int64_t genus_closed_form(int d) {
  if (d < 4)
    throw std::invalid_argument("genus_closed_form requires degree >= 4");
  const std::int64_t n = d;
  const std::int64_t num = (n % 2 == 0) ? n * (n - 2) * (4 * n - 10)
                                        : (n - 1) * (n - 3) * (4 * n - 2);
  if (num % 48 != 0)
    throw std::logic_error("genus closed form is not integral at d = " +
                           std::to_string(d));
  return num / 48;
}

std::int64_t hypersurface_pg(int d) {
  if (d < 1) throw std::invalid_argument("hypersurface_pg requires degree >= 1");
  const std::int64_t n = d;
  return (n - 1) * (n - 2) * (n - 3) / 6;
}

WeightSystem::WeightSystem(std::vector<Rational> w, Rational degree)
    : weights(std::move(w)), weighted_degree(std::move(degree)) {
  if (weights.empty()) throw std::invalid_argument("empty weight system");
  if (weighted_degree <= 0)
    throw std::invalid_argument("weighted degree must be positive");
  for (const Rational& x : weights) {
    if (x <= 0) throw std::invalid_argument("weights must be positive");
    if (x > weighted_degree)
      throw std::invalid_argument("weight exceeds the weighted degree");
  }
}

Rational lct_weight_bound(const WeightSystem& ws) {
  Rational sum(0);
  for (const Rational& x : ws.weights) sum += x;
  Rational lct = sum / ws.weighted_degree;
  return lct > 1 ? Rational(1) : lct;
}

LctVerdict lct_verdict(const Rational& lct) {
  Rational q = lct;
  q.canonicalize();  // callers may pass unreduced fractions
  if (q <= 0 || q > 1)
    throw std::invalid_argument("lct must lie in (0, 1]");
  const Rational threshold = make_rational(4, 5);
  if (q > threshold) return LctVerdict::Stable;
  if (q == threshold) return LctVerdict::Semistable;
  return LctVerdict::NoConclusion;
}

const char* lct_verdict_name(LctVerdict v) {
  switch (v) {
    case LctVerdict::Stable:
      return "Stable";
    case LctVerdict::Semistable:
      return "Semistable";
    default:
      return "NoConclusion";
  }
}

}  // namespace quintic
