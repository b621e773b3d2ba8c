#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintic/rational.hpp"

// Exact sparse multivariate polynomials over the rationals, plus the fixed
// cover/discriminant constructions used by the projection analysis. The text
// format produced by format() is the repo-wide interchange format and parses
// back to an equal polynomial.

namespace quintic {

struct ParseError : std::runtime_error {
  std::size_t position;  // 0-based offset into the input text
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
};

class SparsePolynomial {
 public:
  using Exponents = std::vector<int>;

  // Lexicographic-descending on exponent tuples: the canonical term order.
  struct LexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
      return a > b;
    }
  };
  using TermMap = std::map<Exponents, Rational, LexDesc>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> variables);

  static SparsePolynomial constant(std::vector<std::string> variables,
                                   const Rational& c);
  static SparsePolynomial monomial(std::vector<std::string> variables,
                                   Exponents e, const Rational& c);

  // Grammar: expr := [sign] term (sign term)*; term := factor ('*' factor)*;
  // factor := primary ('^' nonneg-integer)?; primary := rational | variable
  // | '(' expr ')'. Multiplication is always explicit. Errors carry the
  // offending position.
  static SparsePolynomial parse(const std::string& text,
                                std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Max total degree; -1 for the zero polynomial.
  int total_degree() const;
  // Engaged iff every term has the same total degree (zero polynomial: empty).
  std::optional<int> homogeneous_degree() const;
  bool homogeneous_of(int d) const;  // zero polynomial counts for any d

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  // Re-express over a superset of variables (matched by name). Throws when a
  // variable with a nonzero exponent is missing from the new list.
  SparsePolynomial with_variables(std::vector<std::string> variables) const;

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  friend SparsePolynomial operator+(SparsePolynomial a,
                                    const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a,
                                    const SparsePolynomial& b) {
    return a -= b;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a,
                                    const SparsePolynomial& b);
  SparsePolynomial operator*(const Rational& c) const;
  SparsePolynomial pow(int k) const;

  bool operator==(const SparsePolynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

  // Canonical text: terms in lex-descending order, explicit '+'/'-',
  // coefficients as integers or p/q, '*' between all factors.
  std::string format() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void require_same_variables(const SparsePolynomial& o) const;
};

// Branch locus of the projection from a triple point: f3*f5 - f4^2, degree 8.
// Inputs must be homogeneous over x0,x1,x2 of degrees 3, 4, 5.
SparsePolynomial branch_octic(const SparsePolynomial& f3,
                              const SparsePolynomial& f4,
                              const SparsePolynomial& f5);

// Depressed-cubic data of the associated triple cover in P(2,1,1,1):
//   h4 = f4 - g2^2/3,   h6 = x0*f5 + (2/27)*g2^3 - (1/3)*g2*f4.
// Inputs homogeneous over x0,x1,x2 of degrees 2, 4, 5.
std::pair<SparsePolynomial, SparsePolynomial> triple_cover_form(
    const SparsePolynomial& g2, const SparsePolynomial& f4,
    const SparsePolynomial& f5);

// 4*h4^3 + 27*h6^2, degree 12. Inputs homogeneous of degrees 4 and 6.
SparsePolynomial cover_discriminant(const SparsePolynomial& h4,
                                    const SparsePolynomial& h6);

// All (j0,j1,j2) with j0+j1+j2 = deg and w.j >= c, lex-descending.
std::vector<std::array<int, 3>> weighted_support(const std::array<int, 3>& w,
                                                 int c, int deg);

// True when var^k divides every term.
bool divisible_by_power(const SparsePolynomial& p, const std::string& var,
                        int k);

}  // namespace quintic
