#pragma once

// Pointwise linear algebra of a metric g and a symplectic form omega on a
// 2n-dimensional space: the structure operator J with omega(v, w) = g(Jv, w),
// its spectral profile and the compatibility test.

#include <string>
#include <vector>

#include "ciso/linalg.hpp"
#include "ciso/matrix.hpp"
#include "ciso/rational.hpp"

namespace ciso {

class SymmetricForm {
 public:
  /// Throws DEGENERATE_FORM unless m is symmetric and invertible.
  explicit SymmetricForm(RationalMatrix m);
  static SymmetricForm diagonal(const std::vector<int>& signs);

  const RationalMatrix& entries() const { return entries_; }
  std::size_t dim() const { return entries_.rows(); }
  /// Number of negative squares.
  std::size_t index() const { return index_; }

 private:
  RationalMatrix entries_;
  std::size_t index_ = 0;
};

class SkewForm {
 public:
  /// Throws DEGENERATE_FORM unless m is antisymmetric with nonzero Pfaffian,
  /// ODD_DIMENSION for odd sizes.
  explicit SkewForm(RationalMatrix m);

  const RationalMatrix& entries() const { return entries_; }
  std::size_t dim() const { return entries_.rows(); }
  const Rational& pfaffian() const { return pfaffian_; }

 private:
  RationalMatrix entries_;
  Rational pfaffian_;
};

/// The pencil (g, omega). The effective skew form is scale * w; scale is 1
/// unless a contact normalization produced an irrational factor.
class FormPair {
 public:
  FormPair(SymmetricForm g, SkewForm w, Radical scale = {});

  const SymmetricForm& g() const { return g_; }
  const SkewForm& w() const { return w_; }
  const Radical& scale() const { return scale_; }
  std::size_t n() const { return g_.dim() / 2; }

  /// Pf(scale * w) = scale^n * Pf(w).
  Radical pfaffian_magnitude() const;

  /// (P^T G P, P^T W P) for invertible P.
  FormPair change_frame(const RationalMatrix& p) const;

 private:
  SymmetricForm g_;
  SkewForm w_;
  Radical scale_;
};

/// J = scale * base with base^T G = W exactly.
struct StructureOperator {
  RationalMatrix base;
  Radical scale;
};

enum class BlockKind { Frequency, Para, Generic };
const char* block_kind_name(BlockKind kind);

struct SpectralBlock {
  BlockKind kind = BlockKind::Generic;
  /// b for Frequency, c for Para, |Re lambda| for Generic.
  double value = 0.0;
  /// Real dimension of the invariant subspace divided by two.
  std::size_t plane_count = 0;
  /// Frequency only: sign of g on each definite plane.
  std::vector<int> definite_signs;
  /// Algebraic multiplicity and largest Jordan block of the eigenvalue.
  std::size_t multiplicity = 0;
  std::size_t jordan_index = 1;
  /// Imaginary part of the eigenvalue for Generic blocks of complex type.
  double imag = 0.0;
};

struct SpectralGroup {
  double value = 0.0;
  std::size_t s = 0;  // frequency planes
  std::size_t p = 0;  // para or generic planes
  bool generic = false;
};

struct KroneckerProfile {
  std::size_t n = 0;
  std::vector<SpectralBlock> blocks;
  std::size_t s = 0;
  std::size_t t = 0;
  bool semisimple = false;
  std::vector<SpectralGroup> groups;

  bool has_generic() const;
  std::vector<double> frequencies() const;  // one entry per plane
  std::vector<double> para_values() const;  // one entry per plane
};

constexpr double kDefaultTolerance = 1e-9;

/// Solves J^T G = W exactly. Throws DEGENERATE_FORM for singular inputs.
StructureOperator structure_operator(const FormPair& pair);

/// Spectral classification of J. Multiplicities and Jordan structure come from
/// exact squarefree factorizations of the characteristic and minimal
/// polynomials; only root locations are floating point.
/// Throws UNSUPPORTED_PENCIL for non-semisimple imaginary eigenvalues and
/// NUMERIC_AMBIGUITY when distinct roots lie closer than 10 * tol.
KroneckerProfile spectral_classify(const StructureOperator& j, const FormPair& pair, double tol = kDefaultTolerance);

/// J^4 = I, tested exactly.
bool is_compatible(const FormPair& pair);

}  // namespace ciso
