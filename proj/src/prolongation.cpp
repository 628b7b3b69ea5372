#include "ciso/prolongation.hpp"

#include <algorithm>
#include <limits>

#include "ciso/errors.hpp"
#include "ciso/linalg.hpp"

namespace ciso {

namespace {

// Unknown layout: a[i * dim + c] is the coefficient of generator c in A(e_i);
// the last m entries (when w is given) are v_A. With central set, the rows
// omega(e_i, v_A) = 0 are appended.
RationalMatrix assemble(const std::vector<RationalMatrix>& gens, std::size_t m, const RationalMatrix* w,
                        bool central = false) {
  const std::size_t dim = gens.size();
  const std::size_t unknowns = m * dim + (w ? m : 0);
  const std::size_t eqs = m * (m - 1) / 2 * m + (w && central ? m : 0);
  RationalMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k, ++row) {
        for (std::size_t c = 0; c < dim; ++c) {
          sys(row, i * dim + c) += gens[c](k, j);
          sys(row, j * dim + c) -= gens[c](k, i);
        }
        if (w) sys(row, m * dim + k) = -(*w)(i, j);
      }
  if (w && central)
    for (std::size_t i = 0; i < m; ++i, ++row)
      for (std::size_t k = 0; k < m; ++k) sys(row, m * dim + k) = (*w)(i, k);
  return sys;
}

}  // namespace

SymbolAlgebra build_symbol(const FormPair& pair) { return {pair.n(), pair, stabilizer_basis(pair)}; }

ProlongationResult first_prolongation(const SymbolAlgebra& sym) {
  const std::size_t m = 2 * sym.n, dim = sym.g0.dimension();
  // The scale of omega only rescales v_A, which leaves the solution space's
  // dimension unchanged.
  const RationalMatrix& w = sym.pair.w().entries();
  ProlongationResult r;
  const auto bracket_only = exact_nullspace(assemble(sym.g0.generators, m, &w));
  r.bracket_only_dimension = bracket_only.size();
  for (const auto& v : bracket_only)
    for (std::size_t k = m * dim; k < v.size(); ++k)
      if (v[k] != 0) r.v_a_vanishes = false;

  const auto kernel = exact_nullspace(assemble(sym.g0.generators, m, &w, true));
  r.g1_dimension = kernel.size();
  r.trivial = kernel.empty();
  for (const auto& v : kernel) {
    ProlongationElement e;
    for (std::size_t i = 0; i < m; ++i) {
      RationalMatrix a(m, m);
      for (std::size_t c = 0; c < dim; ++c)
        if (v[i * dim + c] != 0) a += sym.g0.generators[c] * v[i * dim + c];
      e.a_of_basis.push_back(std::move(a));
    }
    e.v_a.assign(v.begin() + static_cast<std::ptrdiff_t>(m * dim), v.end());
    r.g1_basis.push_back(std::move(e));
  }
  return r;
}

bool levi_civita_uniqueness(std::size_t index, std::size_t n) {
  if (n == 0 || index > 2 * n) throw Error(ErrorCode::BadSpec, "need 0 <= index <= 2n");
  std::vector<int> signs(2 * n, 1);
  std::fill(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(index), -1);
  std::vector<Rational> diag(signs.begin(), signs.end());
  const StabilizerBasis so = orthogonal_algebra(RationalMatrix::diagonal(diag));
  return exact_nullspace(assemble(so.generators, 2 * n, nullptr)).empty();
}

std::size_t theorem6_bound(const FramedStructure& fs, const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::BadSpec, "need at least one sample point");
  std::size_t least = std::numeric_limits<std::size_t>::max();
  for (const auto& p : points) {
    const PointwiseData data = canonical_contact_data(fs, p);
    least = std::min(least, stabilizer_basis(data.form_pair(fs.signature)).dimension());
  }
  return fs.dim() + least;
}

}  // namespace ciso
