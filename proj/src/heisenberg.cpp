#include "ciso/heisenberg.hpp"

#include "ciso/errors.hpp"
#include "ciso/linalg.hpp"

namespace ciso {

namespace {

Rational half(const Rational& b) { return Rational(b / 2); }

}  // namespace

void HeisenbergSpec::validate() const {
  if (n == 0) throw Error(ErrorCode::BadSpec, "n must be positive");
  if (frequencies.size() != n)
    throw Error(ErrorCode::BadSpec, "expected " + std::to_string(n) + " frequencies, got " + std::to_string(frequencies.size()));
  for (const auto& b : frequencies)
    if (b <= 0) throw Error(ErrorCode::BadSpec, "frequency " + to_string(b) + " is not positive");
  if (signature.size() != 2 * n)
    throw Error(ErrorCode::BadSpec, "expected " + std::to_string(2 * n) + " signature entries, got " + std::to_string(signature.size()));
  for (int e : signature)
    if (e != 1 && e != -1) throw Error(ErrorCode::BadSpec, "signature entries must be +1 or -1");
}

std::vector<Rational> HeisenbergSpec::normalized_frequencies() const {
  validate();
  Rational prod = 1;
  for (const auto& b : frequencies) prod *= b;
  auto r = exact_root(prod, static_cast<unsigned>(n));
  if (!r) return frequencies;
  std::vector<Rational> out;
  for (const auto& b : frequencies) out.push_back(b / *r);
  return out;
}

std::size_t HeisenbergSpec::index() const {
  std::size_t l = 0;
  for (int e : signature) l += e < 0;
  return l;
}

HeisenbergSpec standard_spec(std::size_t n, std::vector<int> signature) {
  HeisenbergSpec s{n, std::vector<Rational>(n, Rational(1)), std::move(signature)};
  s.validate();
  return s;
}

HeisenbergSpec para_model_spec(std::size_t n, std::size_t index, std::size_t t) {
  if (index > 2 * n || t > std::min(index, 2 * n - index) || (index - t) % 2 != 0)
    throw Error(ErrorCode::BadSpec, "t = " + std::to_string(t) + " is not admissible for index " + std::to_string(index));
  std::vector<int> sig;
  const std::size_t negative_planes = (index - t) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < t) {
      sig.insert(sig.end(), {-1, 1});
    } else if (i < t + negative_planes) {
      sig.insert(sig.end(), {-1, -1});
    } else {
      sig.insert(sig.end(), {1, 1});
    }
  }
  return standard_spec(n, std::move(sig));
}

std::vector<std::string> heisenberg_coordinates(std::size_t n) {
  std::vector<std::string> c;
  for (std::size_t i = 1; i <= n; ++i) c.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) c.push_back("y" + std::to_string(i));
  c.push_back("z");
  return c;
}

FramedStructure build_model(const HeisenbergSpec& spec) {
  const auto b = spec.normalized_frequencies();
  const std::size_t n = spec.n, d = 2 * n + 1, z = 2 * n;
  FramedStructure fs;
  fs.name = "heisenberg";
  fs.coordinates = heisenberg_coordinates(n);
  fs.signature = spec.signature;
  std::vector<Polynomial> alpha(d);
  alpha[z] = Polynomial(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(i), yi = Polynomial::variable(n + i);
    const Polynomial hb(half(b[i]));
    VectorField x = VectorField::coordinate(d, i);
    x.components[z] = hb * yi;
    VectorField y = VectorField::coordinate(d, n + i);
    y.components[z] = -(hb * xi);
    fs.frame.push_back(std::move(x));
    fs.frame.push_back(std::move(y));
    alpha[i] = -(hb * yi);
    alpha[n + i] = hb * xi;
  }
  fs.contact_form = OneForm(std::move(alpha));
  return fs;
}

FormPair model_form_pair(const HeisenbergSpec& spec) {
  const auto b = spec.normalized_frequencies();
  std::vector<RationalMatrix> blocks;
  for (const auto& bi : b) blocks.push_back(RationalMatrix{{0, Rational(-bi)}, {bi, 0}});
  return FormPair(SymmetricForm::diagonal(spec.signature), SkewForm(block_diagonal(blocks)));
}

Point group_multiply(const Point& p, const Point& q, const HeisenbergSpec& spec) {
  const auto b = spec.normalized_frequencies();
  const std::size_t n = spec.n, d = 2 * n + 1;
  if (p.size() != d || q.size() != d) throw Error(ErrorCode::DimensionMismatch, "points must have 2n+1 coordinates");
  Point out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = p[k] + q[k];
  for (std::size_t i = 0; i < n; ++i) out[2 * n] += half(b[i]) * (p[n + i] * q[i] - q[n + i] * p[i]);
  return out;
}

Point group_inverse(const Point& p) {
  Point out = p;
  for (auto& x : out) x = -x;
  return out;
}

AffineMap left_translation(const Point& p, const HeisenbergSpec& spec) {
  const auto b = spec.normalized_frequencies();
  const std::size_t n = spec.n, d = 2 * n + 1;
  if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "point must have 2n+1 coordinates");
  AffineMap f{RationalMatrix::identity(d), p};
  for (std::size_t i = 0; i < n; ++i) {
    f.linear(2 * n, i) = half(b[i]) * p[n + i];
    f.linear(2 * n, n + i) = -half(b[i]) * p[i];
  }
  return f;
}

AffineMap linear_isometry_map(const RationalMatrix& sigma, const HeisenbergSpec& spec) {
  const std::size_t m = 2 * spec.n;
  if (sigma.rows() != m || sigma.cols() != m) throw Error(ErrorCode::DimensionMismatch, "sigma must be 2n x 2n");
  if (determinant(sigma) == 0) throw Error(ErrorCode::SingularMap, "sigma is singular");
  AffineMap f = AffineMap::identity(m + 1);
  f.linear.set_block(0, 0, sigma);
  return f;
}

RationalMatrix model_symplectic_matrix(const HeisenbergSpec& spec) {
  const auto b = spec.normalized_frequencies();
  const std::size_t n = spec.n;
  RationalMatrix om(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    om(i, n + i) = b[i];
    om(n + i, i) = -b[i];
  }
  return om;
}

RationalMatrix model_metric_matrix(const HeisenbergSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  RationalMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = spec.signature[2 * i];
    g(n + i, n + i) = spec.signature[2 * i + 1];
  }
  return g;
}

bool preserves_symplectic(const RationalMatrix& sigma, const HeisenbergSpec& spec) {
  const RationalMatrix om = model_symplectic_matrix(spec);
  return sigma.transpose() * om * sigma == om;
}

bool preserves_metric(const RationalMatrix& sigma, const HeisenbergSpec& spec) {
  const RationalMatrix g = model_metric_matrix(spec);
  return sigma.transpose() * g * sigma == g;
}

bool verify_lemma2(const RationalMatrix& sigma, const HeisenbergSpec& spec) {
  if (!preserves_symplectic(sigma, spec)) throw Error(ErrorCode::NotSymplectic, "sigma does not preserve the model's symplectic form");
  const std::size_t n = spec.n;
  const FramedStructure fs = build_model(spec);
  const AffineMap f = linear_isometry_map(sigma, spec);
  for (std::size_t col = 0; col < 2 * n; ++col) {
    // Column col of sigma corresponds to X_{col} for col < n, Y_{col-n} otherwise.
    const std::size_t field = col < n ? 2 * col : 2 * (col - n) + 1;
    VectorField expected = VectorField::zero(2 * n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      expected = expected + Polynomial(sigma(j, col)) * fs.frame[2 * j];
      expected = expected + Polynomial(sigma(n + j, col)) * fs.frame[2 * j + 1];
    }
    if (!(pushforward(f, fs.frame[field]) == expected)) return false;
  }
  return true;
}

RationalMatrix plane_rotation(std::size_t n, std::size_t plane, const Rational& c, const Rational& s) {
  if (c * c + s * s != 1) throw Error(ErrorCode::BadSpec, "rotation needs c^2 + s^2 = 1");
  RationalMatrix r = RationalMatrix::identity(2 * n);
  r(plane, plane) = c;
  r(plane, n + plane) = -s;
  r(n + plane, plane) = s;
  r(n + plane, n + plane) = c;
  return r;
}

RationalMatrix plane_boost(std::size_t n, std::size_t plane, const Rational& c, const Rational& s) {
  if (c * c - s * s != 1) throw Error(ErrorCode::BadSpec, "boost needs c^2 - s^2 = 1");
  RationalMatrix r = RationalMatrix::identity(2 * n);
  r(plane, plane) = c;
  r(plane, n + plane) = s;
  r(n + plane, plane) = s;
  r(n + plane, n + plane) = c;
  return r;
}

RationalMatrix plane_swap(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix r(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t to = k == i ? j : (k == j ? i : k);
    r(to, k) = 1;
    r(n + to, n + k) = 1;
  }
  return r;
}

}  // namespace ciso
