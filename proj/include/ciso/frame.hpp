#pragma once

// Polynomial vector fields and forms on R^(2n+1), and the canonical contact
// data of an orthonormal frame evaluated at rational points.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ciso/matrix.hpp"
#include "ciso/pencil.hpp"
#include "ciso/polynomial.hpp"

namespace ciso {

using Point = std::vector<Rational>;

struct VectorField {
  std::vector<Polynomial> components;

  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> c) : components(std::move(c)) {}
  static VectorField zero(std::size_t dim) { return VectorField(std::vector<Polynomial>(dim)); }
  /// The coordinate field d/dx_k.
  static VectorField coordinate(std::size_t dim, std::size_t k);

  std::size_t dim() const { return components.size(); }
  bool is_zero() const;
  RationalVector evaluate(const Point& p) const;
  /// X(f) = sum_j X^j df/dx_j.
  Polynomial apply(const Polynomial& f) const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Polynomial& f, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.components == b.components; }
};

struct OneForm {
  std::vector<Polynomial> components;

  OneForm() = default;
  explicit OneForm(std::vector<Polynomial> c) : components(std::move(c)) {}
  std::size_t dim() const { return components.size(); }
  Polynomial operator()(const VectorField& x) const;
};

/// Antisymmetric matrix of polynomials; (w)_{jk} = w(d_j, d_k).
struct TwoForm {
  Matrix<Polynomial> entries;

  std::size_t dim() const { return entries.rows(); }
  bool is_zero() const { return entries.is_zero(); }
  Polynomial operator()(const VectorField& x, const VectorField& y) const;
};

/// [X,Y]^k = sum_j X^j d_j Y^k - Y^j d_j X^k. Throws DIMENSION_MISMATCH.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

OneForm differential(const Polynomial& f, std::size_t dim);

/// (da)_{jk} = d_j a_k - d_k a_j.
TwoForm exterior_derivative(const OneForm& a);

struct FramedStructure {
  std::string name;
  std::vector<std::string> coordinates;
  std::vector<VectorField> frame;
  /// g(X_i, X_j) = signature[i] * delta_ij, entries +1 or -1.
  std::vector<int> signature;
  std::optional<OneForm> contact_form;

  std::size_t dim() const { return coordinates.size(); }
  std::size_t n() const { return frame.size() / 2; }
  /// Number of negative squares of g.
  std::size_t index() const;
  /// Shape checks only. Throws VALIDATION_ERROR.
  void validate() const;
};

struct PointwiseData {
  Point point;
  /// The normalized contact covector is scale * alpha.
  RationalVector alpha;
  /// The Reeb vector is scale^-1 * reeb.
  RationalVector reeb;
  /// Extended metric; absent when scale^2 is irrational. It always equals
  /// big_g_horizontal + scale^2 * alpha alpha^T.
  std::optional<RationalMatrix> big_g;
  RationalMatrix big_g_horizontal;
  /// omega in the frame is scale * omega_base.
  SkewForm omega;
  Radical scale;
  /// Pfaffian of the normalized omega: +1 or -1.
  Rational pf;
  /// Pfaffian before normalization.
  Rational raw_pfaffian;

  FormPair form_pair(const std::vector<int>& signature) const;
};

/// Throws FRAME_DEGENERATE when the frame has rank below 2n at p, NOT_CONTACT
/// when omega degenerates at p and VALIDATION_ERROR when a supplied contact
/// form does not annihilate the frame.
PointwiseData canonical_contact_data(const FramedStructure& fs, const Point& p);

struct ScaledSkewForm {
  SkewForm base;
  Radical scale;
};

/// omega(X_i, X_j) = alpha([X_i, X_j]) for the normalized alpha at p.
ScaledSkewForm symplectic_in_frame(const FramedStructure& fs, const Point& p);

/// q -> linear * q + offset.
struct AffineMap {
  RationalMatrix linear;
  RationalVector offset;

  static AffineMap identity(std::size_t dim);
  std::size_t dim() const { return linear.rows(); }
  Point apply(const Point& q) const;
  /// Throws SINGULAR_MAP.
  AffineMap inverse() const;
  /// (*this) after other.
  AffineMap compose(const AffineMap& other) const;
};

/// (f_* X)(q) = Df X(f^-1(q)). Throws SINGULAR_MAP.
VectorField pushforward(const AffineMap& f, const VectorField& x);

/// Coefficients c with y = sum_i c_i X_i(p), or nullopt when y(p) leaves the
/// span of the frame.
std::optional<RationalVector> frame_coordinates(const FramedStructure& fs, const Point& p, const RationalVector& y);

/// At each point the pushed frame lies in the distribution and has the same
/// Gram matrix as the frame itself. Throws SINGULAR_MAP.
bool isometry_check(const AffineMap& f, const FramedStructure& fs, const std::vector<Point>& points);

/// The origin followed by `count` pseudo-random points with numerators in
/// [-3, 3] and denominators in [1, 4].
std::vector<Point> default_sample_points(std::size_t dim, std::size_t count = 8, std::uint64_t seed = 1);

}  // namespace ciso
