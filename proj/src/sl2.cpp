#include "quintic/sl2.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quintic::sl2 {

int Rep::dim() const {
  int d = 0;
  for (const auto& [k, n] : mult) d += n * (k + 1);
  return d;
}

std::vector<int> Rep::character() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(dim()));
  for (const auto& [k, n] : mult)
    for (int c = 0; c < n; ++c)
      for (int t = k; t >= -k; t -= 2) w.push_back(t);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

std::string Rep::str() const {
  if (mult.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : mult) {
    if (!first) os << " + ";
    first = false;
    if (n != 1) os << n << '*';
    os << "Sym^" << k;
  }
  return os.str();
}

Rep irrep(int highest, int multiplicity) {
  if (highest < 0) throw std::invalid_argument("irrep: negative highest weight");
  if (multiplicity < 0) throw std::invalid_argument("irrep: negative multiplicity");
  Rep r;
  if (multiplicity > 0) r.mult[highest] = multiplicity;
  return r;
}

Rep operator+(const Rep& a, const Rep& b) {
  Rep r = a;
  for (const auto& [k, n] : b.mult) r.mult[k] += n;
  return r;
}

Rep operator-(const Rep& a, const Rep& b) {
  Rep r = a;
  for (const auto& [k, n] : b.mult) {
    auto it = r.mult.find(k);
    const int have = (it == r.mult.end()) ? 0 : it->second;
    if (have < n) {
      std::ostringstream os;
      os << "representation difference is virtual at Sym^" << k << " ("
         << have << " - " << n << ")";
      throw std::runtime_error(os.str());
    }
    if (have == n)
      r.mult.erase(it);
    else
      it->second = have - n;
  }
  return r;
}

Rep tensor(const Rep& a, const Rep& b) {
  Rep r;
  for (const auto& [p, np] : a.mult)
    for (const auto& [q, nq] : b.mult)
      for (int k = p + q; k >= std::abs(p - q); k -= 2) r.mult[k] += np * nq;
  return r;
}

Rep decompose_weights(std::vector<int> weights) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  std::multiset<int, std::greater<int>> bag(weights.begin(), weights.end());
  Rep r;
  while (!bag.empty()) {
    const int top = *bag.begin();
    if (top < 0) {
      std::ostringstream os;
      os << "weight multiset is not a character: leftover weight " << top;
      throw std::runtime_error(os.str());
    }
    for (int t = top; t >= -top; t -= 2) {
      auto it = bag.find(t);
      if (it == bag.end()) {
        std::ostringstream os;
        os << "weight multiset is not a character: weight " << t
           << " missing from the Sym^" << top << " string";
        throw std::runtime_error(os.str());
      }
      bag.erase(it);
    }
    r.mult[top] += 1;
  }
  return r;
}

Rep sym_power(const Rep& v, int k) {
  if (k < 0) throw std::invalid_argument("sym_power: negative exponent");
  const std::vector<int> base = v.character();
  std::vector<int> sums;
  // One weight per size-k multiset of base weights.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t start,
                                                       int left, int acc) {
    if (left == 0) {
      sums.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < base.size(); ++i)
      rec(i, left - 1, acc + base[i]);
  };
  rec(0, k, 0);
  return decompose_weights(std::move(sums));
}

SliceReport slice_report() {
  SliceReport rep;
  rep.coordinates = irrep(2) + irrep(0);
  rep.quintics = sym_power(rep.coordinates, 5);
  rep.adjoint = tensor(rep.coordinates, rep.coordinates) - irrep(0);
  rep.orbit = rep.adjoint - irrep(2);
  rep.slice = rep.quintics - irrep(0) - rep.orbit;
  rep.expected = tensor(irrep(5), irrep(5)) + irrep(6);
  rep.matches_expected = (rep.slice == rep.expected);
  return rep;
}

}  // namespace quintic::sl2
