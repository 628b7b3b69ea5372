#include "ciso/rational.hpp"

#include <cctype>
#include <cmath>

#include "ciso/errors.hpp"

namespace ciso {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
    case ErrorCode::UnsupportedPencil: return "UNSUPPORTED_PENCIL";
    case ErrorCode::NumericAmbiguity: return "NUMERIC_AMBIGUITY";
    case ErrorCode::OddDimension: return "ODD_DIMENSION";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotContact: return "NOT_CONTACT";
    case ErrorCode::FrameDegenerate: return "FRAME_DEGENERATE";
    case ErrorCode::SingularMap: return "SINGULAR_MAP";
    case ErrorCode::BadSpec: return "BAD_SPEC";
    case ErrorCode::NotSymplectic: return "NOT_SYMPLECTIC";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
  }
  return "UNKNOWN";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational { throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'"); };
  if (s.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i;
  };
  std::size_t end = digits(pos);
  if (end == pos) return fail();
  Rational value(mpz_class(s.substr(pos, end - pos)));
  if (end < s.size() && s[end] == '/') {
    std::size_t den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != s.size()) return fail();
    mpz_class den(s.substr(end + 1, den_end - end - 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    value /= Rational(den);
  } else if (end < s.size() && s[end] == '.') {
    std::size_t frac_end = digits(end + 1);
    if (frac_end != s.size()) return fail();
    std::string frac = s.substr(end + 1, frac_end - end - 1);
    if (!frac.empty()) {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      value += Rational(mpz_class(frac), scale);
    }
  } else if (end != s.size()) {
    return fail();
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.get_d(); }

namespace {

std::optional<mpz_class> exact_int_root(const mpz_class& z, unsigned k) {
  if (z < 0) return std::nullopt;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned k) {
  if (k == 0 || q < 0) return std::nullopt;
  if (k == 1) return q;
  auto num = exact_int_root(q.get_num(), k);
  auto den = exact_int_root(q.get_den(), k);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& q, int e) {
  Rational base = e < 0 ? Rational(1 / q) : q;
  unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), m);
  out.canonicalize();
  return out;
}

Radical::Radical(Rational coef, Rational radicand, unsigned index)
    : coef_(std::move(coef)), radicand_(std::move(radicand)), index_(index) {
  if (index_ == 0 || radicand_ <= 0) throw Error(ErrorCode::BadSpec, "radical needs positive radicand and index");
  simplify();
}

void Radical::simplify() {
  bool changed = true;
  while (changed && index_ > 1) {
    changed = false;
    for (unsigned e = index_; e >= 2; --e) {
      if (index_ % e != 0) continue;
      if (auto r = exact_root(radicand_, e)) {
        radicand_ = *r;
        index_ /= e;
        changed = true;
        break;
      }
    }
  }
  if (radicand_ == 1) index_ = 1;
  if (index_ == 1) {
    coef_ *= radicand_;
    radicand_ = 1;
  }
}

Rational Radical::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::BadSpec, "radical " + to_string() + " is irrational");
  return coef_;
}

double Radical::to_double() const {
  return coef_.get_d() * std::pow(radicand_.get_d(), 1.0 / static_cast<double>(index_));
}

Radical Radical::pow(int e) const {
  return Radical(rational_pow(coef_, e), rational_pow(radicand_, e), index_);
}

std::optional<Rational> Radical::pow_rational(int e) const {
  Radical p = pow(e);
  if (p.is_rational()) return p.coef();
  return std::nullopt;
}

std::string Radical::to_string() const {
  if (is_rational()) return ciso::to_string(coef_);
  std::string root = "(" + ciso::to_string(radicand_) + ")^(1/" + std::to_string(index_) + ")";
  if (coef_ == 1) return root;
  return ciso::to_string(coef_) + "*" + root;
}

}  // namespace ciso
