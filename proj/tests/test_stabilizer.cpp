#include <doctest.h>

#include "ciso/stabilizer.hpp"
#include "support.hpp"

using namespace ciso;
using namespace testing_support;

namespace {

FormPair make_pair(RationalMatrix g, RationalMatrix w) { return FormPair(SymmetricForm(std::move(g)), SkewForm(std::move(w))); }

bool proportional(const RationalMatrix& a, const RationalMatrix& b) {
  Rational ratio = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (b.data()[i] == 0) {
      if (a.data()[i] != 0) return false;
      continue;
    }
    Rational r = a.data()[i] / b.data()[i];
    if (ratio == 0) ratio = r;
    if (r != ratio) return false;
  }
  return ratio != 0;
}

void check_generators(const StabilizerBasis& basis, const FormPair& p) {
  const auto& g = p.g().entries();
  const auto& w = p.w().entries();
  const auto j = structure_operator(p).base;
  for (const auto& b : basis.generators) {
    CHECK((b.transpose() * g + g * b).is_zero());
    CHECK((b.transpose() * w + w * b).is_zero());
    CHECK(commutator(b, j).is_zero());
  }
  CHECK(bracket_structure(basis).closed);
}

}  // namespace

TEST_CASE("stabilizer examples") {
  auto riem = make_pair(RationalMatrix::identity(2), omega2(1));
  auto b = stabilizer_basis(riem);
  REQUIRE(b.dimension() == 1);
  CHECK(proportional(b.generators[0], RationalMatrix{{0, -1}, {1, 0}}));

  auto lor = make_pair(RationalMatrix::diagonal({-1, 1}), omega2(1));
  b = stabilizer_basis(lor);
  REQUIRE(b.dimension() == 1);
  CHECK(proportional(b.generators[0], RationalMatrix{{0, 1}, {1, 0}}));

  RationalMatrix std_omega(4, 4);
  std_omega.set_block(0, 2, RationalMatrix::identity(2));
  std_omega.set_block(2, 0, -RationalMatrix::identity(2));
  auto u2 = make_pair(RationalMatrix::identity(4), std_omega);
  b = stabilizer_basis(u2);
  CHECK(b.dimension() == 4);
  check_generators(b, u2);
  CHECK(center_dimension(b) == 1);
}

TEST_CASE("bracket structure examples") {
  auto b = stabilizer_basis(make_pair(RationalMatrix::identity(2), omega2(1)));
  auto br = bracket_structure(b);
  CHECK(br.closed);
  CHECK(br.constants[0][0][0] == 0);

  auto deformed = pair_from_blocks({{false, 2, 1}, {false, Rational(1, 2), 1}});
  b = stabilizer_basis(deformed);
  CHECK(b.dimension() == 2);
  br = bracket_structure(b);
  CHECK(br.closed);
  for (const auto& x : br.constants)
    for (const auto& y : x)
      for (const auto& z : y) CHECK(z == 0);
}

TEST_CASE("bound formulas") {
  CHECK(general_isometry_bound(5, 0) == 9);
  CHECK(general_isometry_bound(5, 1) == 7);
  CHECK(general_isometry_bound(3, 1) == 4);
  CHECK(general_isometry_bound(5, 2) == 9);
  CHECK(general_isometry_bound(7, 3) == 16);
  CHECK(general_isometry_bound(7, 1) == 12);

  KroneckerProfile prof;
  prof.n = 2;
  prof.s = 2;
  prof.t = 0;
  prof.semisimple = true;
  prof.groups = {{1.0, 2, 0, false}};
  auto r = dimension_bounds(prof, 5, 0, 4, {true, true});
  CHECK(r.thm1_bound == 9);
  REQUIRE(r.thm3_bound);
  CHECK(*r.thm3_bound == 9);
  CHECK(r.lemma1_bound == 4);
  CHECK(r.blockwise_dim == 4);
  REQUIRE(r.est3_value);
  CHECK(*r.est3_value == 9);

  CHECK(model_isometry_dimension(5, 1, 1) == 7);
  CHECK_FALSE(model_isometry_dimension(5, 1, 0));
  CHECK(admissible_para_counts(2, 2) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("property: stabilizer invariants on generated pairs") {
  Rng rng(31);
  static const std::vector<Rational> values{1, 2, Rational(1, 2), 3};
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<BlockSpec> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.push_back({rng() % 3 == 0, values[rng() % values.size()], rng() % 2 ? 1 : -1});
    FormPair p = pair_from_blocks(blocks);
    auto basis = stabilizer_basis(p);
    check_generators(basis, p);
    auto prof = spectral_classify(structure_operator(p), p);
    std::size_t blockwise = 0;
    for (const auto& g : prof.groups) blockwise += g.s * g.s + g.p * g.p;
    CHECK(basis.dimension() == blockwise);
    CHECK(basis.dimension() <= prof.s * prof.s + prof.t * prof.t);
    if (is_compatible(p)) CHECK(basis.dimension() == prof.s * prof.s + prof.t * prof.t);

    FormPair q = p.change_frame(random_invertible(rng, 2 * n));
    CHECK(stabilizer_basis(q).dimension() == basis.dimension());
  }
}

TEST_CASE("generated bases are deterministic") {
  auto p = pair_from_blocks({{false, 1, 1}, {true, 1, 1}});
  auto a = stabilizer_basis(p);
  auto b = stabilizer_basis(p);
  REQUIRE(a.dimension() == b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) CHECK(a.generators[i] == b.generators[i]);
}
