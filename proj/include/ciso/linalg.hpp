#pragma once

#include <optional>
#include <vector>

#include "ciso/errors.hpp"
#include "ciso/matrix.hpp"

namespace ciso {

/// Reduced row echelon form over the rationals.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm reduced_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the kernel of m. One vector per free column f of the reduced
/// echelon form, with a 1 in position f, zeros in the other free positions and
/// the pivot entries read off the reduced rows. The basis is therefore unique
/// for a given matrix.
std::vector<RationalVector> exact_nullspace(const RationalMatrix& m);

/// Free (non-pivot) columns in increasing order, matching exact_nullspace.
std::vector<std::size_t> free_columns(const EchelonForm& e, std::size_t cols);
/// The exact_nullspace basis read off an echelon form already computed.
std::vector<RationalVector> nullspace_from_echelon(const EchelonForm& e, std::size_t cols);

Rational determinant(RationalMatrix m);

/// Throws SINGULAR_MAP when m is not invertible.
RationalMatrix inverse(const RationalMatrix& m);

/// Some solution of m x = rhs, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Counts of negative, zero and positive squares of a symmetric matrix, found
/// by exact congruence diagonalization.
struct Inertia {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
};
Inertia inertia(const RationalMatrix& symmetric);

bool is_symmetric(const RationalMatrix& m);
bool is_skew(const RationalMatrix& m);

/// Row-major vectorization.
RationalVector vectorize(const RationalMatrix& m);
RationalMatrix unvectorize(const RationalVector& v, std::size_t rows, std::size_t cols);

namespace detail {

template <typename T>
T pfaffian_rec(const Matrix<T>& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  const std::size_t first = idx.front();
  T total(0);
  std::vector<std::size_t> rest(idx.begin() + 1, idx.end());
  for (std::size_t k = 0; k < rest.size(); ++k) {
    const T& entry = a(first, rest[k]);
    if (entry == T(0)) continue;
    std::vector<std::size_t> minor;
    minor.reserve(rest.size() - 1);
    for (std::size_t m = 0; m < rest.size(); ++m)
      if (m != k) minor.push_back(rest[m]);
    T sub = pfaffian_rec(a, minor);
    if (k % 2 == 0)
      total += entry * sub;
    else
      total -= entry * sub;
  }
  return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row; exact over any ring.
/// Throws ODD_DIMENSION for odd sizes.
template <typename T>
T pfaffian(const Matrix<T>& skew) {
  if (!skew.square()) throw Error(ErrorCode::DimensionMismatch, "pfaffian of a non-square matrix");
  if (skew.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "pfaffian of an odd-dimensional matrix");
  std::vector<std::size_t> idx(skew.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(skew, idx);
}

}  // namespace ciso
