#include <doctest.h>

#include "ciso/frame.hpp"
#include "ciso/heisenberg.hpp"
#include "support.hpp"

using namespace ciso;
using namespace testing_support;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = kXYZ) { return parse_polynomial(s, vars); }

VectorField field(std::initializer_list<const char*> comps, const std::vector<std::string>& vars = kXYZ) {
  VectorField x;
  for (const char* c : comps) x.components.push_back(P(c, vars));
  return x;
}

RationalVector eval_form(const OneForm& a, const Point& p) {
  RationalVector v;
  for (const auto& c : a.components) v.push_back(c.evaluate(p));
  return v;
}

}  // namespace

TEST_CASE("polynomial grammar") {
  Polynomial p = P("1/2*y");
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == Exponent{0, 1});
  CHECK(p.terms().begin()->second == Rational(1, 2));
  CHECK(P("(x + y)^2 - x*x - 2*x*y") == P("y^2"));
  CHECK(P("x/2") == P("1/2*x"));
  CHECK(P("-(x - 3)") == P("3 - x"));
  CHECK(P(" 0 ").is_zero());
  CHECK(P("2*3/4").constant_term() == Rational(3, 2));
  CHECK_THROWS_AS(P("x +"), Error);
  CHECK_THROWS_AS(P("w"), Error);
  CHECK_THROWS_AS(P("x/y"), Error);
  CHECK_THROWS_AS(P("x^y"), Error);
  CHECK_THROWS_AS(P("(x"), Error);
  try {
    P("x + $");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
}

TEST_CASE("polynomial printing round-trips") {
  Rng rng(41);
  for (int rep = 0; rep < 50; ++rep) {
    Polynomial p = random_polynomial(rng, 3, 3, 5);
    CHECK(P(p.to_string(kXYZ)) == p);
  }
  CHECK(P("x^2 - 1/2*y + 3").to_string(kXYZ) == "x^2 - 1/2*y + 3");
  CHECK(Polynomial().to_string(kXYZ) == "0");
}

TEST_CASE("jets follow the product and quotient rules") {
  Polynomial f = P("x^2*y + 3*z"), g = P("1 + x*y");
  Point p{Rational(1, 2), 2, -1};
  Jet jf = f.evaluate_jet(p), jg = g.evaluate_jet(p);
  CHECK(jf * jg == (f * g).evaluate_jet(p));
  CHECK(jf + jg == (f + g).evaluate_jet(p));
  Jet q = jf / jg;
  CHECK(q * jg == jf);
}

TEST_CASE("lie bracket examples") {
  VectorField x = field({"1", "0", "1/2*y"}), y = field({"0", "1", "-1/2*x"});
  CHECK(lie_bracket(x, y) == field({"0", "0", "-1"}));
  CHECK(lie_bracket(x, x).is_zero());
  auto fs = build_model({2, {2, Rational(1, 2)}, {1, 1, 1, 1}});
  CHECK(lie_bracket(fs.frame[0], fs.frame[3]).is_zero());
  CHECK(lie_bracket(fs.frame[1], fs.frame[2]).is_zero());
  CHECK_THROWS_AS(lie_bracket(x, VectorField::zero(2)), Error);
}

TEST_CASE("exterior derivative examples") {
  OneForm a{{P("-1/2*y"), P("1/2*x"), P("1")}};
  TwoForm da = exterior_derivative(a);
  CHECK(da.entries(0, 1) == Polynomial(1));
  CHECK(da.entries(1, 0) == Polynomial(-1));
  CHECK(da.entries(0, 2).is_zero());
  CHECK(exterior_derivative(differential(P("x^2*y*z - 3*y"), 3)).is_zero());

  const auto vars = heisenberg_coordinates(2);
  OneForm b{{P("-y1", vars), P("-1/4*y2", vars), P("x1", vars), P("1/4*x2", vars), P("1", vars)}};
  TwoForm db = exterior_derivative(b);
  CHECK(db.entries(0, 2) == Polynomial(2));
  CHECK(db.entries(1, 3) == Polynomial(Rational(1, 2)));
  CHECK(db.entries(0, 1).is_zero());
}

TEST_CASE("property: calculus identities on random instances") {
  Rng rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 2 + rng() % 4;
    VectorField x = random_field(rng, d), y = random_field(rng, d), z = random_field(rng, d);
    VectorField jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) + lie_bracket(lie_bracket(z, x), y);
    CHECK(jac.is_zero());
    CHECK((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
    OneForm a = random_one_form(rng, d);
    Polynomial lhs = exterior_derivative(a)(x, y);
    Polynomial rhs = x.apply(a(y)) - y.apply(a(x)) - a(lie_bracket(x, y));
    CHECK(lhs == rhs);
    CHECK(exterior_derivative(differential(random_polynomial(rng, d, 3), d)).is_zero());
  }
}

TEST_CASE("canonical data of the standard model") {
  auto fs = build_model(standard_spec(1, {1, 1}));
  auto data = canonical_contact_data(fs, {0, 0, 0});
  CHECK(data.alpha == RationalVector{0, 0, 1});
  CHECK(data.reeb == RationalVector{0, 0, 1});
  CHECK(data.scale.is_rational());
  CHECK(data.omega.entries() == RationalMatrix{{0, -1}, {1, 0}});
  CHECK(abs(data.pf) == 1);
  REQUIRE(data.big_g);
  CHECK(*data.big_g == RationalMatrix::identity(3));
  CHECK(symplectic_in_frame(fs, {1, 2, 3}).base.entries() == RationalMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("canonical data of the deformed model") {
  auto fs = build_model({2, {2, Rational(1, 2)}, {1, 1, 1, 1}});
  auto data = canonical_contact_data(fs, Point(5, Rational(0)));
  CHECK(data.raw_pfaffian == 1);
  CHECK(data.scale.is_rational());
  RationalMatrix expected = block_diagonal<Rational>({omega2(-2), omega2(Rational(-1, 2))});
  CHECK(data.omega.entries() == expected);
}

TEST_CASE("non-contact and degenerate frames") {
  FramedStructure flat{"flat", kXYZ, {field({"1", "0", "0"}), field({"0", "1", "0"})}, {1, 1}, std::nullopt};
  try {
    canonical_contact_data(flat, {0, 0, 0});
    FAIL("expected NOT_CONTACT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotContact);
  }
  FramedStructure dependent{"dep", kXYZ, {field({"1", "0", "0"}), field({"x", "0", "0"})}, {1, 1}, std::nullopt};
  try {
    canonical_contact_data(dependent, {1, 0, 0});
    FAIL("expected FRAME_DEGENERATE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FrameDegenerate);
  }
  // Contact away from x = 0 only.
  FramedStructure partial{"partial", kXYZ, {field({"1", "0", "0"}), field({"0", "1", "1/2*x^2"})}, {1, 1}, std::nullopt};
  CHECK_NOTHROW(canonical_contact_data(partial, {1, 0, 0}));
  CHECK_THROWS_AS(canonical_contact_data(partial, {0, 0, 0}), Error);

  FramedStructure wrong_form = build_model(standard_spec(1, {1, 1}));
  wrong_form.contact_form = OneForm{{P("0"), P("1"), P("0")}};
  CHECK_THROWS_AS(canonical_contact_data(wrong_form, {0, 0, 0}), Error);
}

TEST_CASE("property: Reeb vector against a global contact form") {
  // Frames of the form X = a*(d_x + y/2 d_z), Y = d_y - x/2 d_z + c*X with
  // polynomial a, so beta = dz - 1/2(y dx - x dy) annihilates them everywhere
  // while the normalization varies from point to point.
  Rng rng(43);
  const OneForm beta{{P("-1/2*y"), P("1/2*x"), P("1")}};
  const TwoForm dbeta = exterior_derivative(beta);
  int checked = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Polynomial a = Polynomial(1) + Polynomial(small_rational(rng)) * Polynomial::variable(rng() % 3) +
                   Polynomial(small_rational(rng)) * Polynomial::variable(rng() % 3) * Polynomial::variable(rng() % 3);
    Polynomial c = random_polynomial(rng, 3, 1, 2);
    VectorField x = a * field({"1", "0", "1/2*y"});
    VectorField y = field({"0", "1", "-1/2*x"}) + c * x;
    FramedStructure fs{"var", kXYZ, {x, y}, {1, rep % 2 ? -1 : 1}, beta};
    Point p{small_rational(rng), small_rational(rng), small_rational(rng)};
    if (a.evaluate(p) == 0) continue;
    auto data = canonical_contact_data(fs, p);
    ++checked;

    // alpha is proportional to beta(p).
    RationalVector bp = eval_form(beta, p);
    Rational ratio = data.alpha[2] / bp[2];
    for (std::size_t k = 0; k < 3; ++k) CHECK(data.alpha[k] == ratio * bp[k]);
    // Pf of beta on the frame, as a polynomial; alpha = +-|P|^-1 beta for n = 1.
    Polynomial pb = beta(lie_bracket(x, y));
    Rational pv = pb.evaluate(p);
    CHECK(abs(ratio) == 1 / abs(pv));
    // d(beta/P)(R, .) = 0 and (beta/P)(R) = +-1 with exact rational P.
    Rational alpha_r = 0;
    for (std::size_t k = 0; k < 3; ++k) alpha_r += data.alpha[k] * data.reeb[k];
    CHECK(alpha_r == 1);
    for (std::size_t k = 0; k < 3; ++k) {
      Rational s = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        const Rational dj = pb.derivative(j).evaluate(p), dk = pb.derivative(k).evaluate(p);
        const Rational da = dbeta.entries(j, k).evaluate(p) / pv - (dj * bp[k] - dk * bp[j]) / (pv * pv);
        s += data.reeb[j] * da;
      }
      CHECK(s == 0);
    }
    CHECK(abs(data.pf) == 1);
  }
  CHECK(checked > 20);
}

TEST_CASE("irrational normalization keeps exact radicals") {
  // n = 2 with Pf = 2: f = 2^(-1/2).
  auto fs = build_model({2, {2, 1}, {1, 1, 1, 1}});
  auto data = canonical_contact_data(fs, Point(5, Rational(0)));
  CHECK_FALSE(data.scale.is_rational());
  CHECK(abs(data.raw_pfaffian) == 2);
  // Pf(scale * W) = scale^2 * Pf(W) = +-1.
  auto s2 = data.scale.pow_rational(2);
  REQUIRE(s2);
  CHECK(abs(*s2 * pfaffian(data.omega.entries())) == 1);
  REQUIRE(data.big_g);
  Rational ar = 0;
  for (std::size_t k = 0; k < 5; ++k) ar += data.alpha[k] * data.reeb[k];
  CHECK(ar == 1);

  auto fs3 = build_model({3, {2, 1, 1}, {1, 1, 1, 1, 1, 1}});
  auto d3 = canonical_contact_data(fs3, Point(7, Rational(0)));
  CHECK_FALSE(d3.scale.is_rational());
  CHECK_FALSE(d3.big_g);
  CHECK(d3.scale.pow_rational(3));
}

TEST_CASE("property: canonical data does not depend on the orthonormal frame") {
  Rng rng(44);
  auto spec = standard_spec(2, {1, 1, -1, 1});
  auto fs = build_model(spec);
  // Rotation in the first (+,+) plane, boost in the second (-,+) plane,
  // written in frame order.
  const std::vector<RationalMatrix> mixes{
      RationalMatrix{{Rational(3, 5), Rational(-4, 5), 0, 0}, {Rational(4, 5), Rational(3, 5), 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, Rational(5, 3), Rational(4, 3)}, {0, 0, Rational(4, 3), Rational(5, 3)}}};
  for (const auto& mix : mixes)
    for (int rep = 0; rep < 4; ++rep) {
      FramedStructure rotated = fs;
      rotated.contact_form.reset();
      for (std::size_t i = 0; i < 4; ++i) {
        VectorField v = VectorField::zero(5);
        for (std::size_t j = 0; j < 4; ++j) v = v + Polynomial(mix(j, i)) * fs.frame[j];
        rotated.frame[i] = v;
      }
      Point p;
      for (int k = 0; k < 5; ++k) p.push_back(small_rational(rng));
      auto a = canonical_contact_data(fs, p);
      auto b = canonical_contact_data(rotated, p);
      CHECK((a.alpha == b.alpha || [&] {
        RationalVector neg = b.alpha;
        for (auto& v : neg) v = -v;
        return a.alpha == neg;
      }()));
      REQUIRE(a.big_g);
      REQUIRE(b.big_g);
      CHECK(*a.big_g == *b.big_g);
    }
}

TEST_CASE("pushforward examples") {
  auto spec = standard_spec(1, {1, 1});
  auto fs = build_model(spec);
  CHECK(pushforward(AffineMap::identity(3), fs.frame[0]) == fs.frame[0]);
  auto rot = plane_rotation(1, 0, Rational(3, 5), Rational(4, 5));
  auto f = linear_isometry_map(rot, spec);
  VectorField expected = Polynomial(Rational(3, 5)) * fs.frame[0] + Polynomial(Rational(4, 5)) * fs.frame[1];
  CHECK(pushforward(f, fs.frame[0]) == expected);
  auto t = left_translation({1, 2, 3}, spec);
  CHECK(pushforward(t, fs.frame[0]) == fs.frame[0]);
  CHECK(pushforward(t, fs.frame[1]) == fs.frame[1]);
  CHECK_THROWS_AS(pushforward(AffineMap{RationalMatrix(3, 3), RationalVector(3, Rational(0))}, fs.frame[0]), Error);
}

TEST_CASE("isometry check examples") {
  auto pts = default_sample_points(3, 9, 7);
  auto riem = standard_spec(1, {1, 1});
  CHECK(isometry_check(linear_isometry_map(plane_rotation(1, 0, Rational(3, 5), Rational(4, 5)), riem), build_model(riem), pts));
  auto lor = standard_spec(1, {-1, 1});
  CHECK(isometry_check(linear_isometry_map(plane_boost(1, 0, Rational(5, 3), Rational(4, 3)), lor), build_model(lor), pts));
  CHECK_FALSE(isometry_check(linear_isometry_map(RationalMatrix{{2, 0}, {0, Rational(1, 2)}}, riem), build_model(riem), pts));
}

TEST_CASE("default sample points are deterministic") {
  auto a = default_sample_points(5);
  auto b = default_sample_points(5);
  CHECK(a == b);
  CHECK(a.size() == 9);
  CHECK(a[0] == Point(5, Rational(0)));
  CHECK(default_sample_points(5, 8, 2) != a);
  for (const auto& p : a)
    for (const auto& x : p) {
      CHECK(abs(x) <= 3);
      CHECK(x.get_den() <= 4);
    }
}
