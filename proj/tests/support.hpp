#pragma once

// Generators shared by the unit tests and the acceptance runner.

#include <random>
#include <vector>

#include "ciso/frame.hpp"
#include "ciso/heisenberg.hpp"
#include "ciso/linalg.hpp"
#include "ciso/pencil.hpp"

namespace testing_support {

using namespace ciso;

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int range = 3, int max_den = 3) {
  const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  const long den = static_cast<long>(rng() % max_den) + 1;
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// a/b in lowest terms; mpq_class does not reduce on construction.
inline Rational frac(long a, long b) {
  Rational q{mpz_class(a), mpz_class(b)};
  q.canonicalize();
  return q;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int range = 3) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng, range);
  return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t d) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, d, d, 2);
    if (determinant(m) != 0) return m;
  }
}

inline RationalMatrix random_skew(Rng& rng, std::size_t d) {
  RationalMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = small_rational(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline RationalMatrix omega2(const Rational& c) { return RationalMatrix{{0, c}, {Rational(-c), 0}}; }

/// One 2x2 block of a pencil in normal form.
struct BlockSpec {
  bool para = false;  // false: frequency plane
  Rational value = 1;
  int sign = 1;  // frequency planes: sign of g on the plane
};

/// Frequency: G = sign * I, W = value * [[0,1],[-1,0]]; J has eigenvalues
/// +-i value. Para: G = diag(-1, 1), W = value * [[0,1],[-1,0]]; J has
/// eigenvalues +-value.
inline FormPair pair_from_blocks(const std::vector<BlockSpec>& blocks) {
  std::vector<RationalMatrix> gs, ws;
  for (const auto& b : blocks) {
    if (b.para)
      gs.push_back(RationalMatrix{{-1, 0}, {0, 1}});
    else
      gs.push_back(RationalMatrix{{b.sign, 0}, {0, b.sign}});
    ws.push_back(omega2(b.value));
  }
  return FormPair(SymmetricForm(block_diagonal(gs)), SkewForm(block_diagonal(ws)));
}

inline std::size_t count_frequency(const std::vector<BlockSpec>& blocks) {
  std::size_t s = 0;
  for (const auto& b : blocks) s += !b.para;
  return s;
}

/// Standard generators of Sp(2n) for [[0, I], [-I, 0]] in coordinate order.
inline RationalMatrix random_symplectic(Rng& rng, std::size_t n, int factors = 3) {
  RationalMatrix out = RationalMatrix::identity(2 * n);
  for (int f = 0; f < factors; ++f) {
    RationalMatrix g = RationalMatrix::identity(2 * n);
    const auto kind = rng() % 3;
    if (kind < 2) {
      RationalMatrix s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = small_rational(rng, 2, 2);
      g.set_block(kind == 0 ? 0 : n, kind == 0 ? n : 0, s);
    } else {
      RationalMatrix a = random_invertible(rng, n);
      g.set_block(0, 0, a);
      g.set_block(n, n, inverse(a).transpose());
    }
    out = out * g;
  }
  return out;
}

/// Conjugates a standard symplectic matrix into Sp of [[0, B], [-B, 0]].
inline RationalMatrix deform_symplectic(const RationalMatrix& tau, const std::vector<Rational>& b) {
  const std::size_t n = b.size();
  std::vector<Rational> d(2 * n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) d[n + i] = b[i];
  const RationalMatrix m = RationalMatrix::diagonal(d);
  return inverse(m) * tau * m;
}

inline Polynomial random_polynomial(Rng& rng, std::size_t vars, unsigned max_degree = 2, int terms = 4) {
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    Exponent e(vars, 0);
    unsigned deg = static_cast<unsigned>(rng() % (max_degree + 1));
    for (unsigned d = 0; d < deg; ++d) e[rng() % vars] += 1;
    p += Polynomial::monomial(e, small_rational(rng));
  }
  return p;
}

inline VectorField random_field(Rng& rng, std::size_t dim, unsigned max_degree = 2) {
  VectorField x = VectorField::zero(dim);
  for (auto& c : x.components) c = random_polynomial(rng, dim, max_degree, 3);
  return x;
}

inline OneForm random_one_form(Rng& rng, std::size_t dim, unsigned max_degree = 2) {
  OneForm a{std::vector<Polynomial>(dim)};
  for (auto& c : a.components) c = random_polynomial(rng, dim, max_degree, 3);
  return a;
}

/// Basis P (columns) with P^T w P = blockdiag([[0,-1],[1,0]]).
inline RationalMatrix darboux_basis(const RationalMatrix& w) {
  const std::size_t d = w.rows();
  auto form = [&](const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s += a[i] * w(i, j) * b[j];
    return s;
  };
  std::vector<RationalVector> pool;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d, Rational(0));
    e[i] = 1;
    pool.push_back(e);
  }
  RationalMatrix p(d, d);
  for (std::size_t col = 0; col < d; col += 2) {
    RationalVector e = pool.front(), f;
    std::size_t fi = 0;
    for (fi = 1; fi < pool.size(); ++fi)
      if (form(e, pool[fi]) != 0) break;
    f = pool[fi];
    // w(f, e) = 1 gives the [[0,-1],[1,0]] block.
    const Rational c = form(f, e);
    for (auto& x : f) x /= c;
    std::vector<RationalVector> rest;
    for (std::size_t k = 1; k < pool.size(); ++k) {
      if (k == fi) continue;
      RationalVector v = pool[k];
      const Rational ve = form(v, e), vf = form(v, f);
      // Remove the components that pair with e and f.
      for (std::size_t i = 0; i < d; ++i) v[i] += vf * e[i] - ve * f[i];
      rest.push_back(v);
    }
    pool = rest;
    for (std::size_t i = 0; i < d; ++i) {
      p(i, col) = e[i];
      p(i, col + 1) = f[i];
    }
  }
  return p;
}

/// A frame with constant coefficients in the standard n-dimensional model
/// whose pointwise pair is (g, w), up to the normalizing scale. g must be
/// diagonal with entries +-1.
inline FramedStructure realize_pair(const RationalMatrix& g, const RationalMatrix& w, const std::string& name) {
  const std::size_t n = g.rows() / 2;
  FramedStructure base = build_model(standard_spec(n, std::vector<int>(2 * n, 1)));
  const RationalMatrix a = inverse(darboux_basis(w));
  FramedStructure fs = base;
  fs.name = name;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    VectorField x = VectorField::zero(2 * n + 1);
    for (std::size_t j = 0; j < 2 * n; ++j)
      if (a(j, i) != 0) x = x + Polynomial(a(j, i)) * base.frame[j];
    fs.frame[i] = x;
    fs.signature[i] = g(i, i) > 0 ? 1 : -1;
  }
  return fs;
}

/// n = 2 frame whose pair has a Jordan block at the eigenvalues +-i.
inline FramedStructure unsupported_structure() {
  // In the basis (u, v) of R^2 + R^2 with g = [[0, I], [I, 0]] and
  // J = blockdiag(A, -A^T), A a Jordan block over the rotation.
  RationalMatrix a(4, 4);
  a.set_block(0, 0, RationalMatrix{{0, -1}, {1, 0}});
  a.set_block(2, 2, RationalMatrix{{0, -1}, {1, 0}});
  a.set_block(0, 2, RationalMatrix::identity(2));
  RationalMatrix g(8, 8), j(8, 8);
  g.set_block(0, 4, RationalMatrix::identity(4));
  g.set_block(4, 0, RationalMatrix::identity(4));
  j.set_block(0, 0, a);
  j.set_block(4, 4, -a.transpose());
  // Columns (e_i + e_{4+i}/2, e_i - e_{4+i}/2) are orthonormal with signs (+, -).
  RationalMatrix q(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    q(i, 2 * i) = 1;
    q(4 + i, 2 * i) = Rational(1, 2);
    q(i, 2 * i + 1) = 1;
    q(4 + i, 2 * i + 1) = Rational(-1, 2);
  }
  const RationalMatrix w = j.transpose() * g;
  return realize_pair(q.transpose() * g * q, q.transpose() * w * q, "jordan");
}

}  // namespace testing_support
