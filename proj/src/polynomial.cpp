#include "ciso/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ciso/errors.hpp"

namespace ciso {

namespace {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponent multiply(const Exponent& a, const Exponent& b) {
  Exponent out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

void resize_grad(std::vector<Rational>& g, std::size_t n) {
  if (g.size() < n) g.resize(n, Rational(0));
}

}  // namespace

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = i < a.size() ? a[i] : 0, eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---- Jet ----

Jet& Jet::operator+=(const Jet& o) {
  value += o.value;
  resize_grad(grad, o.grad.size());
  for (std::size_t k = 0; k < o.grad.size(); ++k) grad[k] += o.grad[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  value -= o.value;
  resize_grad(grad, o.grad.size());
  for (std::size_t k = 0; k < o.grad.size(); ++k) grad[k] -= o.grad[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  std::vector<Rational> g(std::max(grad.size(), o.grad.size()), Rational(0));
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = d(k) * o.value + value * o.d(k);
  value *= o.value;
  grad = std::move(g);
  return *this;
}

Jet operator-(Jet a) {
  a.value = -a.value;
  for (auto& g : a.grad) g = -g;
  return a;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.value == 0) throw Error(ErrorCode::DimensionMismatch, "jet division by a vanishing value");
  Jet out;
  out.value = a.value / b.value;
  const Rational b2 = b.value * b.value;
  out.grad.resize(std::max(a.grad.size(), b.grad.size()), Rational(0));
  for (std::size_t k = 0; k < out.grad.size(); ++k) out.grad[k] = (a.d(k) * b.value - a.value * b.d(k)) / b2;
  return out;
}

bool operator==(const Jet& a, const Jet& b) {
  if (a.value != b.value) return false;
  const std::size_t n = std::max(a.grad.size(), b.grad.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.d(k) != b.d(k)) return false;
  return true;
}

// ---- Polynomial ----

Polynomial::Polynomial(int c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(Rational c) {
  if (c != 0) terms_.emplace(Exponent{}, std::move(c));
}

Polynomial Polynomial::variable(std::size_t index) {
  Exponent e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(Exponent e, Rational c) {
  Polynomial p;
  trim(e);
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

std::size_t Polynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& [e, c] : terms_) span = std::max(span, e.size());
  return span;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (var >= e.size() || e[var] == 0) continue;
    Exponent d = e;
    Rational coef = c * static_cast<long>(d[var]);
    d[var] -= 1;
    trim(d);
    out.add_term(d, coef);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw Error(ErrorCode::DimensionMismatch, "point has too few coordinates");
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rational_pow(point[i], static_cast<int>(e[i]));
    acc += term;
  }
  return acc;
}

Jet Polynomial::evaluate_jet(const std::vector<Rational>& point) const {
  Jet j;
  j.value = evaluate(point);
  j.grad.assign(point.size(), Rational(0));
  for (std::size_t k = 0; k < point.size(); ++k) j.grad[k] = derivative(k).evaluate(point);
  return j;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out(1), base = *this;
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial(1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.size() > values.size()) throw Error(ErrorCode::DimensionMismatch, "substitution misses a variable");
    Polynomial term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(multiply(ea, eb), Rational(ca * cb));
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (i >= names.size()) throw Error(ErrorCode::DimensionMismatch, "no name for variable " + std::to_string(i));
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string body;
    if (mono.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.get_str() + "*" + mono;
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---- parser ----

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        acc *= Polynomial(Rational(1 / d.constant_term()));
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return Polynomial(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

}  // namespace ciso
