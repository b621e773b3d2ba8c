#include "quintic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace quintic {

namespace {

void validate_variables(const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable '" + v + "'");
  }
}

}  // namespace

SparsePolynomial::SparsePolynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {
  validate_variables(vars_);
}

SparsePolynomial SparsePolynomial::constant(std::vector<std::string> variables,
                                            const Rational& c) {
  SparsePolynomial p(std::move(variables));
  Rational q = c;
  q.canonicalize();  // callers may pass unreduced fractions
  if (q != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(q);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<std::string> variables,
                                            Exponents e, const Rational& c) {
  SparsePolynomial p(std::move(variables));
  p.add_term(std::move(e), c);
  return p;
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("exponent tuple length mismatch");
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent");
  Rational q = c;
  q.canonicalize();  // callers may pass unreduced fractions
  if (q == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(q));
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    deg = std::max(deg, s);
  }
  return deg;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (!deg)
      deg = s;
    else if (*deg != s)
      return std::nullopt;
  }
  return deg;
}

bool SparsePolynomial::homogeneous_of(int d) const {
  if (is_zero()) return true;
  const auto deg = homogeneous_degree();
  return deg && *deg == d;
}

SparsePolynomial SparsePolynomial::with_variables(
    std::vector<std::string> variables) const {
  SparsePolynomial out(std::move(variables));
  std::vector<std::ptrdiff_t> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(out.vars_.begin(), out.vars_.end(), vars_[i]);
    if (it != out.vars_.end()) where[i] = it - out.vars_.begin();
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw std::invalid_argument("variable '" + vars_[i] +
                                    "' missing from the new variable list");
      ne[static_cast<std::size_t>(where[i])] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

void SparsePolynomial::require_same_variables(
    const SparsePolynomial& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomials over different variable lists");
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a,
                           const SparsePolynomial& b) {
  a.require_same_variables(b);
  SparsePolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePolynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
  SparsePolynomial out(vars_);
  Rational q = c;
  q.canonicalize();  // callers may pass unreduced fractions
  if (q == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_[e] = k * q;
  return out;
}

SparsePolynomial SparsePolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  SparsePolynomial out = constant(vars_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string SparsePolynomial::format() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = neg ? Rational(-c) : c;

    std::string varpart;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!varpart.empty()) varpart += '*';
      varpart += vars_[i];
      if (e[i] > 1) varpart += '^' + std::to_string(e[i]);
    }
    if (varpart.empty()) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << '*';
      os << varpart;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    std::ostringstream os;
    os << "parse error at position " << at << ": " << msg;
    throw ParseError(at, os.str());
  }

  std::string read_digits(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail(start, std::string("expected ") + what);
    return text.substr(start, pos - start);
  }

  Rational parse_rational() {
    Rational r{mpz_class(read_digits("integer"))};
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      const std::size_t dpos = pos;
      const mpz_class den(read_digits("denominator"));
      if (den == 0) fail(dpos, "division by zero in coefficient");
      r /= Rational(den);
    }
    return r;
  }

  int parse_exponent() {
    skip_ws();
    const std::size_t at = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      fail(at, "malformed exponent: must be a non-negative integer");
    const std::string digits = read_digits("exponent");
    if (digits.size() > 6) fail(at, "exponent too large");
    return std::stoi(digits);
  }

  SparsePolynomial parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail(pos, "unexpected end of input");
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return SparsePolynomial::constant(vars, parse_rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      const std::string name = text.substr(start, pos - start);
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) fail(start, "unknown variable '" + name + "'");
      SparsePolynomial::Exponents e(vars.size(), 0);
      e[static_cast<std::size_t>(it - vars.begin())] = 1;
      return SparsePolynomial::monomial(vars, std::move(e), 1);
    }
    if (c == '(') {
      ++pos;
      SparsePolynomial inner = parse_expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail(pos, "expected ')'");
      ++pos;
      return inner;
    }
    fail(pos, "expected coefficient, variable, or '('");
  }

  SparsePolynomial parse_factor() {
    SparsePolynomial base = parse_primary();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      base = base.pow(parse_exponent());
    }
    return base;
  }

  SparsePolynomial parse_term() {
    SparsePolynomial t = parse_factor();
    while (peek() == '*') {
      ++pos;
      t = t * parse_factor();
    }
    return t;
  }

  SparsePolynomial parse_expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos;
    }
    SparsePolynomial sum = parse_term();
    if (neg) sum = -sum;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos;
      SparsePolynomial t = parse_term();
      if (c == '-')
        sum -= t;
      else
        sum += t;
    }
    return sum;
  }
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(const std::string& text,
                                         std::vector<std::string> variables) {
  validate_variables(variables);
  Parser p{text, variables};
  SparsePolynomial out = p.parse_expr();
  if (!p.at_end()) p.fail(p.pos, "unexpected trailing input");
  return out;
}

namespace {

void require_degree(const SparsePolynomial& p, int d, const char* name) {
  if (!p.homogeneous_of(d)) {
    std::ostringstream os;
    os << name << " must be homogeneous of degree " << d;
    throw std::invalid_argument(os.str());
  }
}

std::size_t index_of_var(const SparsePolynomial& p, const std::string& name) {
  const auto& vars = p.variables();
  const auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end())
    throw std::invalid_argument("variable '" + name + "' not declared");
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

SparsePolynomial branch_octic(const SparsePolynomial& f3,
                              const SparsePolynomial& f4,
                              const SparsePolynomial& f5) {
  require_degree(f3, 3, "f3");
  require_degree(f4, 4, "f4");
  require_degree(f5, 5, "f5");
  return f3 * f5 - f4 * f4;
}

std::pair<SparsePolynomial, SparsePolynomial> triple_cover_form(
    const SparsePolynomial& g2, const SparsePolynomial& f4,
    const SparsePolynomial& f5) {
  require_degree(g2, 2, "g2");
  require_degree(f4, 4, "f4");
  require_degree(f5, 5, "f5");
  const std::size_t i0 = index_of_var(f5, "x0");
  SparsePolynomial::Exponents e(f5.variables().size(), 0);
  e[i0] = 1;
  const SparsePolynomial x0 =
      SparsePolynomial::monomial(f5.variables(), e, 1);

  SparsePolynomial h4 = f4 - g2 * g2 * make_rational(1, 3);
  SparsePolynomial h6 = x0 * f5 + g2.pow(3) * make_rational(2, 27) -
                        g2 * f4 * make_rational(1, 3);
  return {std::move(h4), std::move(h6)};
}

SparsePolynomial cover_discriminant(const SparsePolynomial& h4,
                                    const SparsePolynomial& h6) {
  require_degree(h4, 4, "h4");
  require_degree(h6, 6, "h6");
  return h4.pow(3) * Rational(4) + h6 * h6 * Rational(27);
}

std::vector<std::array<int, 3>> weighted_support(const std::array<int, 3>& w,
                                                 int c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  std::vector<std::array<int, 3>> out;
  for (int j0 = deg; j0 >= 0; --j0)
    for (int j1 = deg - j0; j1 >= 0; --j1) {
      const int j2 = deg - j0 - j1;
      const long val = static_cast<long>(w[0]) * j0 +
                       static_cast<long>(w[1]) * j1 +
                       static_cast<long>(w[2]) * j2;
      if (val >= c) out.push_back({j0, j1, j2});
    }
  return out;
}

bool divisible_by_power(const SparsePolynomial& p, const std::string& var,
                        int k) {
  if (p.is_zero()) return true;
  const std::size_t idx = index_of_var(p, var);
  for (const auto& [e, c] : p.terms())
    if (e[idx] < k) return false;
  return true;
}

}  // namespace quintic
