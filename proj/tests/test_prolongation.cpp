#include <doctest.h>

#include "ciso/prolongation.hpp"
#include "support.hpp"

using namespace ciso;
using namespace testing_support;

TEST_CASE("symbol algebra dimensions") {
  CHECK(build_symbol(model_form_pair(standard_spec(1, {1, 1}))).total_dimension() == 4);
  CHECK(build_symbol(model_form_pair(standard_spec(2, {1, 1, 1, 1}))).total_dimension() == 9);
  CHECK(build_symbol(model_form_pair(standard_spec(2, {-1, 1, 1, 1}))).total_dimension() == 7);
  CHECK(build_symbol(pair_from_blocks({{false, 2, 1}, {false, Rational(1, 2), 1}})).total_dimension() == 7);
}

TEST_CASE("first prolongation of the models") {
  auto riem1 = first_prolongation(build_symbol(model_form_pair(standard_spec(1, {1, 1}))));
  CHECK(riem1.trivial);
  CHECK(riem1.g1_dimension == 0);
  // With only the g_-1 brackets, n = 1 leaves v_A free.
  CHECK(riem1.bracket_only_dimension == 2);
  CHECK_FALSE(riem1.v_a_vanishes);

  for (const auto& sig : {std::vector<int>{1, 1, 1, 1}, std::vector<int>{-1, 1, 1, 1}, std::vector<int>{-1, 1, -1, 1}}) {
    auto r = first_prolongation(build_symbol(model_form_pair(standard_spec(2, sig))));
    CHECK(r.trivial);
    CHECK(r.bracket_only_dimension == 0);
    CHECK(r.v_a_vanishes);
  }
}

TEST_CASE("property: prolongation of generated pairs is trivial") {
  Rng rng(61);
  static const std::vector<Rational> values{1, 2, Rational(1, 2)};
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<BlockSpec> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.push_back({rng() % 3 == 0, values[rng() % values.size()], rng() % 2 ? 1 : -1});
    FormPair p = pair_from_blocks(blocks).change_frame(random_invertible(rng, 2 * n));
    auto r = first_prolongation(build_symbol(p));
    CHECK(r.g1_dimension == 0);
    CHECK(r.g1_basis.empty());
  }
}

TEST_CASE("torsion-free connection is unique") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t l = 0; l <= 2 * n; ++l) CHECK(levi_civita_uniqueness(l, n));
}

TEST_CASE("sampled isometry bound of the models") {
  auto pts = default_sample_points(3, 3);
  CHECK(theorem6_bound(build_model(standard_spec(1, {1, 1})), pts) == 4);
  CHECK(theorem6_bound(build_model(standard_spec(2, {1, 1, 1, 1})), default_sample_points(5, 3)) == 9);
  CHECK(theorem6_bound(build_model({2, {2, Rational(1, 2)}, {1, 1, 1, 1}}), default_sample_points(5, 3)) == 7);
}
