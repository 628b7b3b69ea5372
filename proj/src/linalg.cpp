#include "ciso/linalg.hpp"

#include <cstdint>
#include <utility>

namespace ciso {

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << "]";
  }
  return os << "]";
}

EchelonForm reduced_echelon(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest entry as pivot keeps the intermediate rationals short.
    std::size_t pivot = rows, best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::size_t size = mpz_sizeinbase(m(i, c).get_num_mpz_t(), 2) + mpz_sizeinbase(m(i, c).get_den_mpz_t(), 2);
      if (pivot == rows || size < best) {
        pivot = i;
        best = size;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).rank(); }

std::vector<std::size_t> free_columns(const EchelonForm& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

namespace {

// Rank of the row-scaled integer matrix modulo 2^61 - 1 is a lower bound on
// the rank over Q, so full column rank there proves the kernel trivial.
bool full_column_rank_mod_p(const RationalMatrix& m) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows < cols) return false;
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto pow = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  };
  std::vector<std::uint64_t> a(rows * cols);
  mpz_class l, t;
  for (std::size_t i = 0; i < rows; ++i) {
    l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      t = m(i, j).get_num() * (l / m(i, j).get_den());
      a[i * cols + j] = mpz_fdiv_ui(t.get_mpz_t(), p);
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c, ++r) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) return false;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[pivot * cols + j]);
    const std::uint64_t inv = pow(a[r * cols + c], p - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = mul(a[i * cols + c], inv);
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + p - mul(f, a[r * cols + j])) % p;
    }
  }
  return true;
}

}  // namespace

std::vector<RationalVector> exact_nullspace(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  if (full_column_rank_mod_p(m)) return {};
  return nullspace_from_echelon(reduced_echelon(m), cols);
}

std::vector<RationalVector> nullspace_from_echelon(const EchelonForm& e, std::size_t cols) {
  std::vector<RationalVector> basis;
  for (std::size_t f : free_columns(e, cols)) {
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t row = 0; row < e.pivots.size(); ++row) v[e.pivots[row]] = -e.reduced(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational factor = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RationalMatrix::identity(n));
  EchelonForm e = reduced_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::SingularMap, "matrix is singular");
  return e.reduced.block(0, n, n, n);
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side size mismatch");
  const std::size_t cols = m.cols();
  RationalMatrix aug(m.rows(), cols + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, cols) = rhs[r];
  EchelonForm e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t row = 0; row < e.pivots.size(); ++row) x[e.pivots[row]] = e.reduced(row, cols);
  return x;
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!is_symmetric(symmetric)) throw Error(ErrorCode::DegenerateForm, "inertia of a non-symmetric matrix");
  RationalMatrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia out;
  // Congruence a -> E a E^T, one index at a time.
  auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < n; ++j) a(j, dst) += f * a(j, src);
  };
  auto swap_row_col = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        swap_row_col(k, d);
      } else {
        std::size_t off = k + 1;
        while (off < n && a(k, off) == 0) ++off;
        if (off == n) {
          ++out.zero;
          continue;
        }
        add_row_col(k, off, Rational(1));  // new diagonal entry 2 a(k,off)
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_row_col(i, k, Rational(-a(i, k) / pivot));
    }
    if (pivot > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  return out;
}

bool is_symmetric(const RationalMatrix& m) { return m.square() && m == m.transpose(); }
bool is_skew(const RationalMatrix& m) { return m.square() && m == -m.transpose(); }

RationalVector vectorize(const RationalMatrix& m) { return m.data(); }

RationalMatrix unvectorize(const RationalVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "vector size does not match shape");
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

}  // namespace ciso
