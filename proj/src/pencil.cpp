#include "ciso/pencil.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "ciso/errors.hpp"
#include "ciso/unipoly.hpp"

namespace ciso {

SymmetricForm::SymmetricForm(RationalMatrix m) : entries_(std::move(m)) {
  if (!is_symmetric(entries_)) throw Error(ErrorCode::DegenerateForm, "metric matrix is not symmetric");
  Inertia in = inertia(entries_);
  if (in.zero != 0) throw Error(ErrorCode::DegenerateForm, "metric matrix is singular");
  index_ = in.negative;
}

SymmetricForm SymmetricForm::diagonal(const std::vector<int>& signs) {
  std::vector<Rational> d;
  for (int s : signs) d.emplace_back(s);
  return SymmetricForm(RationalMatrix::diagonal(d));
}

SkewForm::SkewForm(RationalMatrix m) : entries_(std::move(m)) {
  if (!entries_.square()) throw Error(ErrorCode::DimensionMismatch, "skew form is not square");
  if (entries_.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "skew form of odd dimension");
  if (!is_skew(entries_)) throw Error(ErrorCode::DegenerateForm, "skew form is not antisymmetric");
  pfaffian_ = ciso::pfaffian(entries_);
  if (pfaffian_ == 0) throw Error(ErrorCode::DegenerateForm, "skew form is degenerate");
}

FormPair::FormPair(SymmetricForm g, SkewForm w, Radical scale)
    : g_(std::move(g)), w_(std::move(w)), scale_(std::move(scale)) {
  if (g_.dim() != w_.dim()) throw Error(ErrorCode::DimensionMismatch, "g and omega act on different dimensions");
  if (g_.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "empty pencil");
}

Radical FormPair::pfaffian_magnitude() const {
  Rational pf = abs(w_.pfaffian());
  Radical s = scale_.pow(static_cast<int>(n()));
  return Radical(s.coef() * pf, s.radicand(), s.index());
}

FormPair FormPair::change_frame(const RationalMatrix& p) const {
  RationalMatrix pt = p.transpose();
  return FormPair(SymmetricForm(pt * g_.entries() * p), SkewForm(pt * w_.entries() * p), scale_);
}

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::Frequency: return "FREQUENCY";
    case BlockKind::Para: return "PARA";
    case BlockKind::Generic: return "GENERIC";
  }
  return "?";
}

bool KroneckerProfile::has_generic() const {
  return std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.kind == BlockKind::Generic; });
}

std::vector<double> KroneckerProfile::frequencies() const {
  std::vector<double> out;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::Frequency) out.insert(out.end(), b.plane_count, b.value);
  return out;
}

std::vector<double> KroneckerProfile::para_values() const {
  std::vector<double> out;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::Para) out.insert(out.end(), b.plane_count, b.value);
  return out;
}

StructureOperator structure_operator(const FormPair& pair) {
  // omega(v, w) = g(Jv, w)  <=>  J^T G = W  <=>  J = -G^{-1} W.
  RationalMatrix ginv;
  try {
    ginv = inverse(pair.g().entries());
  } catch (const Error&) {
    throw Error(ErrorCode::DegenerateForm, "metric is singular");
  }
  StructureOperator j{-(ginv * pair.w().entries()), pair.scale()};
  if (j.base.transpose() * pair.g().entries() != pair.w().entries())
    throw Error(ErrorCode::DegenerateForm, "structure operator failed its defining relation");
  return j;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd to_eigen(const RationalMatrix& m, double scale = 1.0) {
  MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scale * m(r, c).get_d();
  return out;
}

struct LabelledRoot {
  std::complex<double> z;
  std::size_t multiplicity;
  std::size_t jordan;
};

/// Orthonormal basis of the column span, dropping directions below rel_tol.
MatrixXd column_span(const MatrixXd& cols, double rel_tol) {
  if (cols.cols() == 0) return cols;
  Eigen::JacobiSVD<MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > rel_tol * std::max(1.0, sv(0))) ++r;
  return svd.matrixU().leftCols(r);
}

MatrixXd kernel(const MatrixXd& m, Eigen::Index dim) {
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim);
}

/// Splits the real eigenspace of +-ib into g-orthogonal planes span(v, Jv)
/// and returns the sign of g on each. Uses g(Jv, Jv) = b^2 g(v, v).
std::vector<int> split_definite_planes(const MatrixXd& jd, const MatrixXd& gd, double b, MatrixXd space,
                                       double tol) {
  std::vector<int> signs;
  auto g = [&](const VectorXd& x, const VectorXd& y) { return x.dot(gd * y); };
  while (space.cols() >= 2) {
    VectorXd best;
    double best_norm = -1.0;
    for (Eigen::Index i = 0; i < space.cols(); ++i) {
      VectorXd v = space.col(i);
      double q = std::abs(g(v, v));
      if (q > best_norm) best_norm = q, best = v;
      for (Eigen::Index k = i + 1; k < space.cols(); ++k) {
        VectorXd w = space.col(i) + space.col(k);
        double qw = std::abs(g(w, w)) / w.squaredNorm();
        if (qw > best_norm) best_norm = qw, best = w;
      }
    }
    if (best_norm < 1e3 * tol) throw Error(ErrorCode::NumericAmbiguity, "metric looks degenerate on a frequency eigenspace");
    VectorXd v = best;
    VectorXd jv = jd * v;
    double gvv = g(v, v), gjj = g(jv, jv);
    if (std::abs(gjj - b * b * gvv) > 1e-6 * std::max(1.0, std::abs(gjj)))
      throw Error(ErrorCode::NumericAmbiguity, "frequency plane failed g(Jv,Jv) = b^2 g(v,v)");
    signs.push_back(gvv > 0 ? 1 : -1);
    MatrixXd projected(space.rows(), space.cols());
    for (Eigen::Index i = 0; i < space.cols(); ++i) {
      VectorXd u = space.col(i);
      u -= (g(u, v) / gvv) * v;
      u -= (g(u, jv) / gjj) * jv;
      projected.col(i) = u;
    }
    space = column_span(projected, 1e-7);
  }
  std::sort(signs.begin(), signs.end());
  return signs;
}

}  // namespace

KroneckerProfile spectral_classify(const StructureOperator& j, const FormPair& pair, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::ValidationError, "tolerance must be positive");
  const std::size_t dim = j.base.rows();
  KroneckerProfile prof;
  prof.n = dim / 2;

  UniPoly charpoly = characteristic_polynomial(j.base);
  UniPoly minpoly = minimal_polynomial(j.base);
  prof.semisimple = is_squarefree(minpoly);

  const double scale = j.scale.to_double();
  std::vector<UniPoly> alg = squarefree_factorization(charpoly);
  std::vector<UniPoly> geo = squarefree_factorization(minpoly);
  std::vector<LabelledRoot> roots;
  for (std::size_t k = 0; k < alg.size(); ++k) {
    if (alg[k].degree() <= 0) continue;
    for (std::size_t m = 0; m < geo.size(); ++m) {
      UniPoly common = gcd(alg[k], geo[m]);
      if (common.degree() <= 0) continue;
      for (auto z : common.roots()) roots.push_back({z * scale, k + 1, m + 1});
    }
  }

  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (std::abs(roots[a].z - roots[b].z) < 10 * tol)
        throw Error(ErrorCode::NumericAmbiguity, "distinct eigenvalues of J are closer than 10*tol");

  const MatrixXd jd = to_eigen(j.base, scale);
  const MatrixXd gd = to_eigen(pair.g().entries());
  const auto n2 = static_cast<Eigen::Index>(dim);

  for (const auto& r : roots) {
    const double re = r.z.real(), im = r.z.imag();
    const bool real_axis = std::abs(im) <= tol;
    const bool imag_axis = std::abs(re) <= tol;
    SpectralBlock blk;
    blk.multiplicity = r.multiplicity;
    blk.jordan_index = r.jordan;
    if (imag_axis && !real_axis) {
      if (im < 0) continue;
      if (r.jordan > 1)
        throw Error(ErrorCode::UnsupportedPencil, "purely imaginary eigenvalue with a nontrivial Jordan block");
      blk.kind = BlockKind::Frequency;
      blk.value = im;
      blk.plane_count = r.multiplicity;
      MatrixXd e = kernel(jd * jd + im * im * MatrixXd::Identity(n2, n2), static_cast<Eigen::Index>(2 * r.multiplicity));
      blk.definite_signs = split_definite_planes(jd, gd, im, e, tol);
      if (blk.definite_signs.size() != blk.plane_count)
        throw Error(ErrorCode::NumericAmbiguity, "frequency eigenspace did not split into definite planes");
    } else if (real_axis && !imag_axis) {
      if (re < 0) continue;
      blk.kind = r.jordan == 1 ? BlockKind::Para : BlockKind::Generic;
      blk.value = re;
      blk.plane_count = r.multiplicity;
    } else if (!real_axis && !imag_axis) {
      if (re < 0 || im < 0) continue;
      blk.kind = BlockKind::Generic;
      blk.value = re;
      blk.imag = im;
      blk.plane_count = 2 * r.multiplicity;
    } else {
      throw Error(ErrorCode::DegenerateForm, "J has a zero eigenvalue");
    }
    prof.blocks.push_back(std::move(blk));
  }

  std::sort(prof.blocks.begin(), prof.blocks.end(), [](const SpectralBlock& a, const SpectralBlock& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.value != b.value) return a.value < b.value;
    return a.imag < b.imag;
  });

  for (const auto& b : prof.blocks)
    if (b.kind == BlockKind::Frequency) prof.s += b.plane_count;
  prof.t = prof.n - prof.s;

  // Frequency and para blocks of equal magnitude share a group; generic blocks
  // are kept apart.
  for (const auto& b : prof.blocks) {
    const bool generic = b.kind == BlockKind::Generic;
    auto it = std::find_if(prof.groups.begin(), prof.groups.end(), [&](const SpectralGroup& g) {
      return !generic && !g.generic && std::abs(g.value - b.value) <= tol;
    });
    if (!generic) {
      for (const auto& g : prof.groups) {
        double gap = std::abs(g.value - b.value);
        if (!g.generic && gap > tol && gap < 10 * tol)
          throw Error(ErrorCode::NumericAmbiguity, "frequency and para values closer than 10*tol");
      }
    }
    if (it == prof.groups.end()) {
      prof.groups.push_back({b.value, 0, 0, generic});
      it = prof.groups.end() - 1;
    }
    if (b.kind == BlockKind::Frequency)
      it->s += b.plane_count;
    else
      it->p += b.plane_count;
  }
  std::sort(prof.groups.begin(), prof.groups.end(), [](const SpectralGroup& a, const SpectralGroup& b) {
    if (a.generic != b.generic) return !a.generic;
    return a.value < b.value;
  });
  return prof;
}

bool is_compatible(const FormPair& pair) {
  StructureOperator j = structure_operator(pair);
  RationalMatrix j2 = j.base * j.base;
  RationalMatrix j4 = j2 * j2;
  const std::size_t dim = j4.rows();
  // base^4 must be a scalar matrix c*I with c = scale^-4.
  Rational c = j4(0, 0);
  if (j4 != RationalMatrix::identity(dim) * c) return false;
  auto target = j.scale.pow_rational(-4);
  return target && *target == c;
}

}  // namespace ciso
