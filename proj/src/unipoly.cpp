#include "ciso/unipoly.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "ciso/errors.hpp"
#include "ciso/linalg.hpp"

namespace ciso {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lead;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lead = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::complex<double> UniPoly::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::vector<std::complex<double>> UniPoly::roots() const {
  using Real = boost::multiprecision::cpp_bin_float_100;
  using Complex = boost::multiprecision::cpp_complex_100;
  const int d = degree();
  if (d <= 0) return {};
  UniPoly m = monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -m.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

  // Aberth iteration from the double-precision eigenvalues, so that clusters
  // closer than double precision still separate.
  std::vector<Complex> c;
  for (int i = 0; i <= d; ++i) {
    const Rational& q = m.coeff(static_cast<std::size_t>(i));
    c.emplace_back(Real(q.get_num().get_str()) / Real(q.get_den().get_str()));
  }
  std::vector<Complex> z;
  for (int i = 0; i < d; ++i) {
    std::complex<double> e = solver.eigenvalues()(i);
    // Break exact ties so the correction terms stay finite.
    e += std::complex<double>(1e-7 * (i + 1), 1e-7 * (2 * i + 1));
    z.emplace_back(Real(e.real()), Real(e.imag()));
  }
  const Real eps("1e-80");
  for (int iter = 0; iter < 500; ++iter) {
    Real worst = 0;
    for (int k = 0; k < d; ++k) {
      Complex p = c[d], dp = 0;
      for (int i = d - 1; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (abs(p) == 0) continue;
      Complex w = p / dp, sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      Complex step = w / (Complex(1) - w * sum);
      z[k] -= step;
      const Real size = abs(z[k]) > 1 ? Real(abs(z[k])) : Real(1);
      const Real rel = abs(step) / size;
      if (rel > worst) worst = rel;
    }
    if (worst < eps) break;
  }
  std::vector<std::complex<double>> out;
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<UniPoly> squarefree_factorization(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() <= 0) return factors;
  UniPoly f = p.monic();
  UniPoly a = gcd(f, f.derivative());
  UniPoly b = f.divmod(a).first;
  UniPoly c = f.derivative().divmod(a).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    factors.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

UniPoly characteristic_polynomial(const RationalMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix m(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return UniPoly(std::move(c));
}

UniPoly minimal_polynomial(const RationalMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<RationalVector> powers{vectorize(RationalMatrix::identity(n))};
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    power = power * a;
    RationalVector target = vectorize(power);
    RationalMatrix basis(n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n * n; ++i) basis(i, j) = powers[j][i];
    if (auto x = solve(basis, target)) {
      std::vector<Rational> coeffs(d + 1, Rational(0));
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = -(*x)[j];
      coeffs[d] = 1;
      return UniPoly(std::move(coeffs));
    }
    powers.push_back(std::move(target));
  }
  return characteristic_polynomial(a);
}

RationalMatrix evaluate_matrix(const UniPoly& p, const RationalMatrix& a) {
  const std::size_t n = a.rows();
  RationalMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) acc = acc * a + RationalMatrix::identity(n) * p.coeff(static_cast<std::size_t>(k));
  return acc;
}

}  // namespace ciso
