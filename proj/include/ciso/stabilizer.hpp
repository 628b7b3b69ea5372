#pragma once

#include <optional>
#include <vector>

#include "ciso/matrix.hpp"
#include "ciso/pencil.hpp"

namespace ciso {

/// Basis of the Lie algebra of O(g) ∩ Sp(omega): matrices A with
/// A^T G + G A = 0 and A^T W + W A = 0.
struct StabilizerBasis {
  std::vector<RationalMatrix> generators;
  /// Free column of the vectorized constraint system owning each generator.
  std::vector<std::size_t> free_positions;
  /// structure_constants[a][b][c]: coefficient of generator c in [B_a, B_b].
  std::vector<std::vector<std::vector<Rational>>> structure_constants;
  std::size_t dimension() const { return generators.size(); }
};

StabilizerBasis stabilizer_basis(const FormPair& pair);

/// Kernel of A^T G + G A = 0 alone, i.e. so(G), in the same normalization.
StabilizerBasis orthogonal_algebra(const RationalMatrix& g);

struct BracketStructure {
  std::vector<std::vector<std::vector<Rational>>> constants;
  bool closed = false;
};

/// Expands every commutator in the basis exactly. Throws NOT_CLOSED when a
/// residual is nonzero.
BracketStructure bracket_structure(const StabilizerBasis& basis);

/// Dimension of the center computed from the structure constants.
std::size_t center_dimension(const StabilizerBasis& basis);

struct BoundsReport {
  std::size_t dim_m = 0;
  std::size_t n = 0;
  std::size_t index = 0;
  std::size_t exact_dim_g0 = 0;
  std::size_t lemma1_bound = 0;   // s^2 + t^2
  std::size_t blockwise_dim = 0;  // sum s_i^2 + p_i^2
  std::size_t thm1_bound = 0;
  std::optional<std::size_t> thm3_bound;
  std::optional<std::size_t> thm4_bound;
  std::optional<std::size_t> est3_value;
};

struct BoundsFlags {
  bool compatible = false;
  bool regular = false;
};

/// General isometry-dimension bound from the index alone:
/// dim M + n^2 if the index is even or equals n, else dim M + (n-1)^2 + 1.
std::size_t general_isometry_bound(std::size_t dim_m, std::size_t index);

/// dim M + (n-t)^2 + t^2, defined when t <= min(l, 2n-l) and l - t is even.
std::optional<std::size_t> model_isometry_dimension(std::size_t dim_m, std::size_t index, std::size_t t);

/// Every admissible t for a given index.
std::vector<std::size_t> admissible_para_counts(std::size_t n, std::size_t index);

BoundsReport dimension_bounds(const KroneckerProfile& profile, std::size_t dim_m, std::size_t index,
                              std::size_t exact_dim, BoundsFlags flags);

/// Flags read from the profile itself: compatible when every value is 1 and
/// the profile is semisimple without generic blocks; regular when it has no
/// generic blocks and is semisimple.
BoundsFlags flags_from_profile(const KroneckerProfile& profile, double tol = kDefaultTolerance);

}  // namespace ciso
