#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ciso/matrix.hpp"
#include "ciso/rational.hpp"

namespace ciso {

/// Univariate polynomial over the rationals; coefficients in increasing degree,
/// trailing zeros trimmed. Used for characteristic and minimal polynomials.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(std::size_t degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::complex<double> evaluate(std::complex<double> x) const;

  /// Roots of a squarefree polynomial, polished with Newton steps.
  std::vector<std::complex<double>> roots() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd.
UniPoly gcd(UniPoly a, UniPoly b);

bool is_squarefree(const UniPoly& p);

/// Yun factorization p = c * prod_k f_k^k with squarefree, pairwise coprime
/// monic f_k. Entry k-1 holds f_k (possibly constant 1).
std::vector<UniPoly> squarefree_factorization(const UniPoly& p);

UniPoly characteristic_polynomial(const RationalMatrix& a);
UniPoly minimal_polynomial(const RationalMatrix& a);

/// p(A) evaluated exactly.
RationalMatrix evaluate_matrix(const UniPoly& p, const RationalMatrix& a);

}  // namespace ciso
