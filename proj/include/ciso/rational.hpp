#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ciso {

using Rational = mpq_class;

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
/// Throws ciso::Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Exact k-th root of a nonnegative rational, if it exists.
std::optional<Rational> exact_root(const Rational& q, unsigned k);

Rational rational_pow(const Rational& q, int e);

/// A positive real of the form coef * radicand^(1/index) with rational coef and
/// radicand. Used to carry contact-form normalization factors that are not
/// rational; only integer powers divisible by the index ever collapse back to
/// plain rationals.
class Radical {
 public:
  Radical() = default;
  Radical(Rational coef, Rational radicand, unsigned index);
  static Radical root_of(const Rational& radicand, unsigned index) { return {1, radicand, index}; }

  const Rational& coef() const { return coef_; }
  const Rational& radicand() const { return radicand_; }
  unsigned index() const { return index_; }

  bool is_rational() const { return index_ == 1; }
  /// Throws if not rational.
  Rational as_rational() const;

  double to_double() const;
  Radical pow(int e) const;
  Radical inverse() const { return pow(-1); }
  /// Rational value of pow(e) if it is rational.
  std::optional<Rational> pow_rational(int e) const;

  std::string to_string() const;

  friend bool operator==(const Radical& a, const Radical& b) {
    return a.coef_ == b.coef_ && a.radicand_ == b.radicand_ && a.index_ == b.index_;
  }

 private:
  void simplify();

  Rational coef_{1};
  Rational radicand_{1};
  unsigned index_{1};
};

}  // namespace ciso
