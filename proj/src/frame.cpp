#include "ciso/frame.hpp"

#include <random>

#include "ciso/errors.hpp"
#include "ciso/linalg.hpp"

namespace ciso {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, what);
}

// Solves a x = rhs over jets, pivoting on entries whose value is nonzero.
// a must be invertible at the base point.
std::vector<Jet> solve_jets(Matrix<Jet> a, std::vector<Jet> rhs) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).value == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::FrameDegenerate, "frame is dependent at the point");
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      std::swap(rhs[piv], rhs[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == Jet(0)) continue;
      const Jet m = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= m * a(c, k);
      rhs[r] -= m * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) rhs[c] = rhs[c] / a(c, c);
  return rhs;
}

RationalMatrix frame_matrix(const FramedStructure& fs, const Point& p) {
  // Column i holds X_i(p).
  const std::size_t d = fs.dim();
  RationalMatrix m(d, fs.frame.size());
  for (std::size_t i = 0; i < fs.frame.size(); ++i) {
    RationalVector v = fs.frame[i].evaluate(p);
    for (std::size_t k = 0; k < d; ++k) m(k, i) = v[k];
  }
  return m;
}

}  // namespace

// ---- fields and forms ----

VectorField VectorField::coordinate(std::size_t dim, std::size_t k) {
  VectorField x = zero(dim);
  x.components.at(k) = Polynomial(1);
  return x;
}

bool VectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

RationalVector VectorField::evaluate(const Point& p) const {
  RationalVector out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(p));
  return out;
}

Polynomial VectorField::apply(const Polynomial& f) const {
  Polynomial out;
  for (std::size_t j = 0; j < components.size(); ++j)
    if (!components[j].is_zero()) out += components[j] * f.derivative(j);
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_dim(a.dim(), b.dim(), "vector field dimensions differ");
  VectorField out = a;
  for (std::size_t k = 0; k < a.dim(); ++k) out.components[k] += b.components[k];
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_dim(a.dim(), b.dim(), "vector field dimensions differ");
  VectorField out = a;
  for (std::size_t k = 0; k < a.dim(); ++k) out.components[k] -= b.components[k];
  return out;
}

VectorField operator*(const Polynomial& f, const VectorField& x) {
  VectorField out = x;
  for (auto& c : out.components) c *= f;
  return out;
}

Polynomial OneForm::operator()(const VectorField& x) const {
  require_same_dim(dim(), x.dim(), "form and field dimensions differ");
  Polynomial out;
  for (std::size_t k = 0; k < dim(); ++k) out += components[k] * x.components[k];
  return out;
}

Polynomial TwoForm::operator()(const VectorField& x, const VectorField& y) const {
  require_same_dim(dim(), x.dim(), "form and field dimensions differ");
  require_same_dim(dim(), y.dim(), "form and field dimensions differ");
  Polynomial out;
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k)
      if (!entries(j, k).is_zero()) out += x.components[j] * entries(j, k) * y.components[k];
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_dim(x.dim(), y.dim(), "bracket of fields of different dimension");
  VectorField out = VectorField::zero(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) out.components[k] = x.apply(y.components[k]) - y.apply(x.components[k]);
  return out;
}

OneForm differential(const Polynomial& f, std::size_t dim) {
  OneForm out{std::vector<Polynomial>(dim)};
  for (std::size_t k = 0; k < dim; ++k) out.components[k] = f.derivative(k);
  return out;
}

TwoForm exterior_derivative(const OneForm& a) {
  const std::size_t d = a.dim();
  TwoForm out{Matrix<Polynomial>(d, d)};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      Polynomial e = a.components[k].derivative(j) - a.components[j].derivative(k);
      out.entries(k, j) = -e;
      out.entries(j, k) = std::move(e);
    }
  return out;
}

// ---- structures ----

std::size_t FramedStructure::index() const {
  std::size_t l = 0;
  for (int e : signature) l += e < 0;
  return l;
}

void FramedStructure::validate() const {
  const std::size_t d = dim();
  if (d < 3 || d % 2 == 0)
    throw Error(ErrorCode::ValidationError, "need an odd number (at least 3) of coordinates, got " + std::to_string(d));
  if (frame.size() != d - 1)
    throw Error(ErrorCode::ValidationError,
                "frame must have " + std::to_string(d - 1) + " fields, got " + std::to_string(frame.size()));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame[i].dim() != d)
      throw Error(ErrorCode::ValidationError, "frame field " + std::to_string(i) + " has " +
                                                  std::to_string(frame[i].dim()) + " components, expected " +
                                                  std::to_string(d));
    for (const auto& c : frame[i].components)
      if (c.variable_span() > d) throw Error(ErrorCode::ValidationError, "component uses an unknown variable");
  }
  if (signature.size() != frame.size())
    throw Error(ErrorCode::ValidationError, "signature must have " + std::to_string(frame.size()) + " entries, got " +
                                                std::to_string(signature.size()));
  for (int e : signature)
    if (e != 1 && e != -1) throw Error(ErrorCode::ValidationError, "signature entries must be +1 or -1");
  if (contact_form && contact_form->dim() != d)
    throw Error(ErrorCode::ValidationError, "contact form must have " + std::to_string(d) + " components");
}

FormPair PointwiseData::form_pair(const std::vector<int>& signature) const {
  return FormPair(SymmetricForm::diagonal(signature), omega, scale);
}

PointwiseData canonical_contact_data(const FramedStructure& fs, const Point& p) {
  fs.validate();
  const std::size_t d = fs.dim(), m = fs.frame.size(), n = fs.n();
  require_same_dim(p.size(), d, "point has the wrong number of coordinates");

  // Annihilator at p: choose the free column of the frame matrix there.
  const RationalMatrix fm0 = frame_matrix(fs, p);
  const EchelonForm ech = reduced_echelon(fm0.transpose());
  if (ech.rank() < m) throw Error(ErrorCode::FrameDegenerate, "frame has rank " + std::to_string(ech.rank()) + " at the point");
  const std::size_t free_col = free_columns(ech, d).front();

  // alpha0 as a 1-jet of the local section with alpha0[free_col] = 1.
  std::vector<std::vector<Jet>> xj(m, std::vector<Jet>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) xj[i][k] = fs.frame[i].components[k].evaluate_jet(p);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < d; ++k)
    if (k != free_col) others.push_back(k);
  Matrix<Jet> sys(m, m);
  std::vector<Jet> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < m; ++c) sys(i, c) = xj[i][others[c]];
    rhs[i] = -xj[i][free_col];
  }
  const std::vector<Jet> sol = solve_jets(sys, rhs);
  std::vector<Jet> alpha0(d);
  alpha0[free_col] = Jet(1);
  for (std::size_t c = 0; c < m; ++c) alpha0[others[c]] = sol[c];

  if (fs.contact_form) {
    RationalVector a;
    for (const auto& c : fs.contact_form->components) a.push_back(c.evaluate(p));
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < d; ++k) s += a[k] * fm0(k, i);
      if (s != 0) throw Error(ErrorCode::ValidationError, "contact form does not annihilate frame field " + std::to_string(i));
    }
  }

  // W0_ij = alpha0([X_i, X_j]) as jets.
  Matrix<Jet> w0(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const VectorField br = lie_bracket(fs.frame[i], fs.frame[j]);
      Jet s(0);
      for (std::size_t k = 0; k < d; ++k)
        if (!br.components[k].is_zero()) s += alpha0[k] * br.components[k].evaluate_jet(p);
      w0(j, i) = -s;
      w0(i, j) = std::move(s);
    }
  const Jet pf0 = pfaffian(w0);
  if (pf0.value == 0) throw Error(ErrorCode::NotContact, "omega is degenerate at the point");

  // f = |P|^(-1/n); only its log-derivative lambda enters the Reeb equations.
  const Rational abs_p = abs(pf0.value);
  const Radical f = Radical::root_of(Rational(1 / abs_p), static_cast<unsigned>(n));
  RationalVector lambda(d);
  for (std::size_t k = 0; k < d; ++k) lambda[k] = -pf0.d(k) / (pf0.value * static_cast<long>(n));

  RationalVector a0(d);
  for (std::size_t k = 0; k < d; ++k) a0[k] = alpha0[k].value;
  RationalMatrix da0(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) da0(j, k) = alpha0[k].d(j) - alpha0[j].d(k);

  // sum_j R_j (da0_jk + lambda_j a0_k) = lambda_k for all k, and a0 . R = 1.
  RationalMatrix reeb_sys(d + 1, d);
  RationalVector reeb_rhs(d + 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) reeb_sys(k, j) = da0(j, k) + lambda[j] * a0[k];
    reeb_rhs[k] = lambda[k];
  }
  for (std::size_t j = 0; j < d; ++j) reeb_sys(d, j) = a0[j];
  reeb_rhs[d] = 1;
  auto reeb_tilde = solve(reeb_sys, reeb_rhs);
  if (!reeb_tilde) throw Error(ErrorCode::NotContact, "no Reeb vector at the point");

  // Fold the rational part of f into the data; keep the radical part as scale.
  const Rational coef = f.coef();
  const Radical scale = Radical::root_of(f.radicand(), f.index());
  RationalMatrix wb(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) wb(i, j) = w0(i, j).value * coef;
  RationalVector alpha(d), reeb(d);
  for (std::size_t k = 0; k < d; ++k) {
    alpha[k] = a0[k] * coef;
    reeb[k] = (*reeb_tilde)[k] / coef;
  }

  RationalMatrix ft(d, d);
  ft.set_block(0, 0, fm0);
  for (std::size_t k = 0; k < d; ++k) ft(k, m) = (*reeb_tilde)[k];
  const RationalMatrix fti = inverse(ft);
  std::vector<Rational> eps(d, Rational(0));
  for (std::size_t i = 0; i < m; ++i) eps[i] = fs.signature[i];
  const RationalMatrix horizontal = fti.transpose() * RationalMatrix::diagonal(eps) * fti;
  std::optional<RationalMatrix> big_g;
  if (auto s2 = scale.pow_rational(2)) {
    RationalMatrix vert(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) vert(j, k) = alpha[j] * alpha[k] * *s2;
    big_g = horizontal + vert;
  }

  SkewForm omega(wb);
  return PointwiseData{p,         alpha,        reeb, big_g, horizontal, omega, scale, Rational(sgn(pf0.value)),
                       pf0.value};
}

ScaledSkewForm symplectic_in_frame(const FramedStructure& fs, const Point& p) {
  PointwiseData data = canonical_contact_data(fs, p);
  return {data.omega, data.scale};
}

// ---- affine maps ----

AffineMap AffineMap::identity(std::size_t dim) { return {RationalMatrix::identity(dim), RationalVector(dim, Rational(0))}; }

Point AffineMap::apply(const Point& q) const {
  Point out = linear * q;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += offset[k];
  return out;
}

AffineMap AffineMap::inverse() const {
  RationalMatrix li = ciso::inverse(linear);
  RationalVector off = li * offset;
  for (auto& x : off) x = -x;
  return {li, off};
}

AffineMap AffineMap::compose(const AffineMap& other) const {
  return {linear * other.linear, apply(other.offset)};
}

VectorField pushforward(const AffineMap& f, const VectorField& x) {
  const std::size_t d = f.dim();
  require_same_dim(d, x.dim(), "map and field dimensions differ");
  const AffineMap inv = f.inverse();
  std::vector<Polynomial> pre(d);
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial e(inv.offset[i]);
    for (std::size_t k = 0; k < d; ++k)
      if (inv.linear(i, k) != 0) e += Polynomial(inv.linear(i, k)) * Polynomial::variable(k);
    pre[i] = std::move(e);
  }
  std::vector<Polynomial> moved(d);
  for (std::size_t j = 0; j < d; ++j) moved[j] = x.components[j].substitute(pre);
  VectorField out = VectorField::zero(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      if (f.linear(k, j) != 0) out.components[k] += Polynomial(f.linear(k, j)) * moved[j];
  return out;
}

std::optional<RationalVector> frame_coordinates(const FramedStructure& fs, const Point& p, const RationalVector& y) {
  return solve(frame_matrix(fs, p), y);
}

bool isometry_check(const AffineMap& f, const FramedStructure& fs, const std::vector<Point>& points) {
  fs.validate();
  std::vector<VectorField> pushed;
  for (const auto& x : fs.frame) pushed.push_back(pushforward(f, x));
  const std::size_t m = fs.frame.size();
  for (const auto& q : points) {
    RationalMatrix c(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto coords = frame_coordinates(fs, q, pushed[i].evaluate(q));
      if (!coords) return false;
      for (std::size_t j = 0; j < m; ++j) c(j, i) = (*coords)[j];
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational gram = 0;
        for (std::size_t k = 0; k < m; ++k) gram += c(k, i) * c(k, j) * fs.signature[k];
        if (gram != (i == j ? Rational(fs.signature[i]) : Rational(0))) return false;
      }
  }
  return true;
}

std::vector<Point> default_sample_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::vector<Point> out;
  out.emplace_back(dim, Rational(0));
  std::mt19937_64 rng(seed);
  // Drawn by hand from the raw engine output so the points do not depend on
  // the standard library's distribution implementation.
  for (std::size_t i = 0; i < count; ++i) {
    Point p(dim);
    for (auto& x : p) {
      const long num = static_cast<long>(rng() % 7) - 3;
      const long den = static_cast<long>(rng() % 4) + 1;
      x = Rational(mpz_class(num), mpz_class(den));
      x.canonicalize();
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ciso
