#include "ciso/stabilizer.hpp"

#include <cmath>

#include "ciso/errors.hpp"
#include "ciso/linalg.hpp"

namespace ciso {

namespace {

// Rows of the linear map A -> A^T M + M A on row-major vec(A). Only the upper
// triangle is needed: the image is symmetric for symmetric M and
// antisymmetric for antisymmetric M.
void append_invariance_rows(const RationalMatrix& m, bool include_diagonal, std::vector<RationalVector>& rows) {
  const std::size_t d = m.rows();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = include_diagonal ? i : i + 1; j < d; ++j) {
      RationalVector row(d * d, Rational(0));
      for (std::size_t k = 0; k < d; ++k) {
        row[k * d + i] += m(k, j);
        row[k * d + j] += m(i, k);
      }
      rows.push_back(std::move(row));
    }
}

StabilizerBasis basis_from_rows(const std::vector<RationalVector>& rows, std::size_t d) {
  RationalMatrix system(rows.size(), d * d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < d * d; ++c) system(r, c) = rows[r][c];
  EchelonForm e = reduced_echelon(system);
  StabilizerBasis out;
  out.free_positions = free_columns(e, d * d);
  for (const auto& v : nullspace_from_echelon(e, d * d)) out.generators.push_back(unvectorize(v, d, d));
  return out;
}

}  // namespace

StabilizerBasis stabilizer_basis(const FormPair& pair) {
  const std::size_t d = pair.g().dim();
  std::vector<RationalVector> rows;
  append_invariance_rows(pair.g().entries(), true, rows);
  // The scale factor of omega does not change its invariance algebra.
  append_invariance_rows(pair.w().entries(), false, rows);
  StabilizerBasis out = basis_from_rows(rows, d);
  out.structure_constants = bracket_structure(out).constants;
  return out;
}

StabilizerBasis orthogonal_algebra(const RationalMatrix& g) {
  if (!is_symmetric(g)) throw Error(ErrorCode::DegenerateForm, "metric is not symmetric");
  std::vector<RationalVector> rows;
  append_invariance_rows(g, true, rows);
  return basis_from_rows(rows, g.rows());
}

BracketStructure bracket_structure(const StabilizerBasis& basis) {
  const std::size_t dim = basis.dimension();
  BracketStructure out;
  out.constants.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (b < a) {
        for (std::size_t c = 0; c < dim; ++c) out.constants[a][b][c] = -out.constants[b][a][c];
        continue;
      }
      RationalMatrix br = commutator(basis.generators[a], basis.generators[b]);
      RationalVector flat = vectorize(br);
      // Generator c is the unique basis element with a 1 at its free column.
      RationalMatrix residual = br;
      for (std::size_t c = 0; c < dim; ++c) {
        const Rational coef = flat[basis.free_positions[c]];
        out.constants[a][b][c] = coef;
        if (coef != 0) residual -= basis.generators[c] * coef;
      }
      if (!residual.is_zero()) throw Error(ErrorCode::NotClosed, "commutator left the span of the generators");
    }
  out.closed = true;
  return out;
}

std::size_t center_dimension(const StabilizerBasis& basis) {
  const std::size_t dim = basis.dimension();
  if (dim == 0) return 0;
  const auto& c = basis.structure_constants.empty() ? bracket_structure(basis).constants : basis.structure_constants;
  RationalMatrix m(dim * dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t k = 0; k < dim; ++k) m(b * dim + k, a) = c[a][b][k];
  return dim - rank(m);
}

std::size_t general_isometry_bound(std::size_t dim_m, std::size_t index) {
  const std::size_t n = (dim_m - 1) / 2;
  if (index % 2 == 0 || index == n) return dim_m + n * n;
  return dim_m + (n - 1) * (n - 1) + 1;
}

std::optional<std::size_t> model_isometry_dimension(std::size_t dim_m, std::size_t index, std::size_t t) {
  const std::size_t n = (dim_m - 1) / 2;
  if (index > 2 * n) return std::nullopt;
  if (t > std::min(index, 2 * n - index) || (index - t) % 2 != 0) return std::nullopt;
  return dim_m + (n - t) * (n - t) + t * t;
}

std::vector<std::size_t> admissible_para_counts(std::size_t n, std::size_t index) {
  std::vector<std::size_t> out;
  if (index > 2 * n) return out;
  for (std::size_t t = 0; t <= std::min(index, 2 * n - index); ++t)
    if ((index - t) % 2 == 0) out.push_back(t);
  return out;
}

BoundsReport dimension_bounds(const KroneckerProfile& profile, std::size_t dim_m, std::size_t index,
                              std::size_t exact_dim, BoundsFlags flags) {
  if (dim_m != 2 * profile.n + 1)
    throw Error(ErrorCode::DimensionMismatch, "manifold dimension must be 2n+1 for the given profile");
  BoundsReport r;
  r.dim_m = dim_m;
  r.n = profile.n;
  r.index = index;
  r.exact_dim_g0 = exact_dim;
  r.lemma1_bound = profile.s * profile.s + profile.t * profile.t;
  for (const auto& g : profile.groups) r.blockwise_dim += g.s * g.s + g.p * g.p;
  r.thm1_bound = general_isometry_bound(dim_m, index);
  if (flags.compatible) {
    const std::size_t rest = profile.n - profile.s;
    r.thm3_bound = dim_m + profile.s * profile.s + rest * rest;
  }
  if (flags.regular) {
    std::size_t sum = 0;
    for (const auto& g : profile.groups) {
      const std::size_t k = g.s + g.p;
      sum += g.s * g.s + (k - g.s) * (k - g.s);
    }
    r.thm4_bound = dim_m + sum;
  }
  r.est3_value = model_isometry_dimension(dim_m, index, profile.t);
  return r;
}

BoundsFlags flags_from_profile(const KroneckerProfile& profile, double tol) {
  BoundsFlags f;
  f.regular = profile.semisimple && !profile.has_generic();
  f.compatible = f.regular;
  for (const auto& b : profile.blocks)
    if (std::abs(b.value - 1.0) > tol) f.compatible = false;
  return f;
}

}  // namespace ciso
