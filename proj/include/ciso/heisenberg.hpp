#pragma once

// Left-invariant contact structures on the Heisenberg group R^(2n+1) with
// coordinates (x_1..x_n, y_1..y_n, z), their group law and linear isometries.

#include <vector>

#include "ciso/frame.hpp"

namespace ciso {

struct HeisenbergSpec {
  std::size_t n = 1;
  /// b_1..b_n as given, before normalization.
  std::vector<Rational> frequencies;
  /// Frame order X_1, Y_1, ..., X_n, Y_n.
  std::vector<int> signature;

  /// Throws BAD_SPEC.
  void validate() const;
  /// The b_i rescaled so that their product is 1, when the needed n-th root
  /// is rational; otherwise the b_i unchanged.
  std::vector<Rational> normalized_frequencies() const;
  std::size_t index() const;
};

HeisenbergSpec standard_spec(std::size_t n, std::vector<int> signature);

/// t planes of signature (-,+), (l - t)/2 planes (-,-), the rest (+,+), all
/// with b = 1. Throws BAD_SPEC unless t is admissible for the index l.
HeisenbergSpec para_model_spec(std::size_t n, std::size_t index, std::size_t t);

std::vector<std::string> heisenberg_coordinates(std::size_t n);

/// X_i = d/dx_i + (b_i/2) y_i d/dz, Y_i = d/dy_i - (b_i/2) x_i d/dz with the
/// contact form dz - sum (b_i/2)(y_i dx_i - x_i dy_i) attached.
FramedStructure build_model(const HeisenbergSpec& spec);

/// The pointwise pair (diag(signature), blockdiag(-b_i [[0,1],[-1,0]])) of a
/// model, identical at every point.
FormPair model_form_pair(const HeisenbergSpec& spec);

/// z'' = z + z' + 1/2 sum b_i (y_i x'_i - y'_i x_i).
Point group_multiply(const Point& p, const Point& q, const HeisenbergSpec& spec);
Point group_inverse(const Point& p);

/// q -> p * q.
AffineMap left_translation(const Point& p, const HeisenbergSpec& spec);

/// (x, y, z) -> (sigma (x, y), z), sigma acting in coordinate order
/// (x_1..x_n, y_1..y_n). Throws SINGULAR_MAP.
AffineMap linear_isometry_map(const RationalMatrix& sigma, const HeisenbergSpec& spec);

/// [[0, B], [-B, 0]] with B = diag(b) in coordinate order.
RationalMatrix model_symplectic_matrix(const HeisenbergSpec& spec);

/// Metric of the frame written in coordinate order (x_1..x_n, y_1..y_n).
RationalMatrix model_metric_matrix(const HeisenbergSpec& spec);

bool preserves_symplectic(const RationalMatrix& sigma, const HeisenbergSpec& spec);
bool preserves_metric(const RationalMatrix& sigma, const HeisenbergSpec& spec);

/// Checks exactly that f_sigma pushes X_i and Y_i to
/// sum_j sigma_{j,i} X_j + sigma_{n+j,i} Y_j and
/// sum_j sigma_{j,n+i} X_j + sigma_{n+j,n+i} Y_j. Throws NOT_SYMPLECTIC unless
/// sigma preserves the model's symplectic matrix.
bool verify_lemma2(const RationalMatrix& sigma, const HeisenbergSpec& spec);

/// Rotation by (c, s) with c^2 + s^2 = 1 in the (x_i, y_i) plane.
RationalMatrix plane_rotation(std::size_t n, std::size_t plane, const Rational& c, const Rational& s);
/// [[c, s], [s, c]] with c^2 - s^2 = 1 in the (x_i, y_i) plane.
RationalMatrix plane_boost(std::size_t n, std::size_t plane, const Rational& c, const Rational& s);
/// Exchanges planes i and j.
RationalMatrix plane_swap(std::size_t n, std::size_t i, std::size_t j);

}  // namespace ciso
