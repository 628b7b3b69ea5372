#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ciso/rational.hpp"

namespace ciso {

/// Exponent multi-index with trailing zeros trimmed, so polynomials in
/// different numbers of variables combine freely.
using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x_0 > x_1 > ...
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// First-order jet: value and gradient at a point.
struct Jet {
  Rational value;
  std::vector<Rational> grad;  // empty means zero

  Jet() = default;
  Jet(int c) : value(c) {}  // NOLINT: constants convert implicitly, as for the other rings
  Jet(Rational v) : value(std::move(v)) {}  // NOLINT
  Jet(Rational v, std::vector<Rational> g) : value(std::move(v)), grad(std::move(g)) {}

  Rational d(std::size_t k) const { return k < grad.size() ? grad[k] : Rational(0); }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator-(Jet a);
  /// Requires b.value != 0.
  friend Jet operator/(const Jet& a, const Jet& b);
  friend bool operator==(const Jet& a, const Jet& b);
};

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrLex>;

  Polynomial() = default;
  Polynomial(int c);       // NOLINT
  Polynomial(Rational c);  // NOLINT
  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Exponent e, Rational c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// -1 for zero.
  int degree() const;
  /// Largest variable index that occurs, plus one.
  std::size_t variable_span() const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  Jet evaluate_jet(const std::vector<Rational>& point) const;
  /// Replaces variable i by values[i]; variables beyond values.size() must not occur.
  Polynomial substitute(const std::vector<Polynomial>& values) const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Terms in decreasing graded-lex order, e.g. "x1^2 - 1/2*y1 + 3". Parses
  /// back to the same polynomial.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// Grammar: sums and products of rationals p/q, named variables, integer
/// powers '^' and parentheses; division only by nonzero constants.
/// Throws ParseError with the column of the offending character.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace ciso
