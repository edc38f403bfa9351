#include "doctest.h"
#include "helpers.hpp"

using namespace curvehom;
using testing::P;
using testing::qxy;
using testing::V;

namespace {

ChainComplex koszul_xy() {
  // 0 -> R -> R^2 -> R -> 0 in degrees -2..0
  const ModuleMap d2 = ModuleMap::parse(qxy(), {{"y"}, {"-x"}}, 1);
  const ModuleMap d1 = ModuleMap::parse(qxy(), {{"x", "y"}}, 2);
  return ChainComplex(qxy(), -2, {1, 2, 1}, {d2, d1});
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Koszul complex of (x, y)") {
    const ChainComplex k = koszul_xy();
    CHECK(homology_dimension(k, 0) == Dimension::finite(1));
    CHECK(homology_dimension(k, -1) == Dimension::finite(0));
    CHECK(homology_dimension(k, -2) == Dimension::finite(0));
    CHECK(homology_generators(k, -1).empty());
    CHECK(euler_characteristic(k) == 1);
  }

  TEST_CASE("d o d must vanish") {
    const ModuleMap a = ModuleMap::parse(qxy(), {{"1"}}, 1);
    CHECK_THROWS_AS(ChainComplex(qxy(), 0, {1, 1, 1}, {a, a}), PreconditionError);
  }

  TEST_CASE("exact spot with identity maps") {
    const ModuleMap id = ModuleMap::identity(qxy(), 2);
    const ModuleMap zero(qxy(), 2, 2);
    const ChainComplex c(qxy(), 0, {2, 2, 2}, {id, zero});
    CHECK(homology_dimension(c, 1) == Dimension::finite(0));
    CHECK(homology_dimension(c, 0) == Dimension::finite(0));
  }

  TEST_CASE("zero complex") {
    const ChainComplex c(qxy(), 0, {0}, {});
    CHECK(euler_characteristic(c) == 0);
    CHECK(homology_dimension(c, 0) == Dimension::finite(0));
  }

  TEST_CASE("infinite homology is reported, not guessed") {
    const ModuleMap f = ModuleMap::parse(qxy(), {{"x*y"}}, 1);
    const ChainComplex c(qxy(), -1, {1, 1}, {f});
    CHECK_FALSE(homology_dimension(c, 0).is_finite());
    CHECK_THROWS_AS(euler_characteristic(c), UnsupportedError);
    CHECK_THROWS_AS(homology_at(c, 0).basis(), UnsupportedError);
  }

  TEST_CASE("subquotient coordinates") {
    const ChainComplex k = koszul_xy();
    const PresentedModule h = homology_at(k, 0);
    REQUIRE(h.dimension() == Dimension::finite(1));
    CHECK(h.is_zero_class(V({"x^2 + y"})));
    CHECK_FALSE(h.is_zero_class(V({"x + 3"})));
    const auto c = h.coordinates(V({"x + 3"}));
    REQUIRE(c.size() == 1);
    CHECK(c[0] != 0);
  }

  TEST_CASE("zero chain map induces the zero matrix") {
    const ChainComplex k = koszul_xy();
    std::map<int, LinearOperator> comps;
    const ChainMap zero(k, k, comps);
    CHECK(induced_map(zero, 0).is_zero());
    CHECK(induced_rank(zero, 0) == Dimension::finite(0));
  }

  TEST_CASE("non-commuting components are rejected") {
    const ChainComplex k = koszul_xy();
    std::map<int, LinearOperator> comps{{0, LinearOperator(ModuleMap::identity(qxy(), 1))}};
    CHECK_THROWS_AS(ChainMap(k, k, comps), PreconditionError);
  }

  TEST_CASE("first-order operators") {
    // v -> x * dv/dx on rank 1
    const ModuleMap zero(qxy(), 1, 1);
    const ModuleMap mx = ModuleMap::parse(qxy(), {{"x"}}, 1);
    const LinearOperator euler_x(zero, {mx, zero});
    CHECK(euler_x.apply(V({"x^3 + y"})) == V({"3*x^3"}));
    CHECK_FALSE(euler_x.is_module_map());
    CHECK_THROWS_AS(euler_x.compose(euler_x), UnsupportedError);
    const LinearOperator scale(ModuleMap::parse(qxy(), {{"2"}}, 1));
    CHECK(scale.compose(euler_x).apply(V({"x"})) == V({"2*x"}));
    CHECK(euler_x.equals(euler_x));
    CHECK_FALSE(euler_x.equals(scale));
  }

  TEST_CASE("rational matrices") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(m.rank() == 1);
    CHECK((m * m).at(0, 0) == 5);
    CHECK(RationalMatrix(3, 0).rank() == 0);
  }
}
