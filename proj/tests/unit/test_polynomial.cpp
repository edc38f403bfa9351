#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

using namespace curvehom;
using testing::P;
using testing::qxy;
using testing::V;

TEST_SUITE("polynomial") {
  TEST_CASE("text round trip keeps descending grevlex order") {
    CHECK(P("x^3 + x^2 - y^2").to_string() == "x^3 + x^2 - y^2");
    CHECK(P("-y^2 + x^2 + x^3").to_string() == "x^3 + x^2 - y^2");
    CHECK(P("-3/2*x*y - y").to_string() == "-3/2*x*y - y");
    CHECK(P("6/4*x").to_string() == "3/2*x");
    CHECK(P("0").is_zero());
    CHECK(P("x - x").is_zero());
    for (const char* s : {"1", "-1", "x*y^2 - 7/3", "13*x + 8", "2*x^2 + 2*x"})
      CHECK(P(P(s).to_string()).to_string() == P(s).to_string());
  }

  TEST_CASE("arithmetic is exact") {
    CHECK((P("x + 1") * P("x - 1")).to_string() == "x^2 - 1");
    CHECK((P("1/3*x") * Rational(3)).to_string() == "x");
    CHECK(P("x + y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(P("x^3 + x^2 - y^2").derivative(0) == P("3*x^2 + 2*x"));
    CHECK(P("x^3 + x^2 - y^2").derivative(1) == P("-2*y"));
    CHECK(P("x^2*y").degree() == 3);
    CHECK(P("0").degree() == -1);
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(P("x +"), InputError);
    CHECK_THROWS_AS(P("z"), InputError);
    CHECK_THROWS_AS(P("1/0"), InputError);
    CHECK_THROWS_AS(P("x^"), InputError);
  }

  TEST_CASE("rings must match") {
    auto other = Ring::polynomial({"u", "v"});
    CHECK_THROWS_AS(P("x") + P("u", other), InputError);
  }
}

TEST_SUITE("groebner") {
  TEST_CASE("normal form examples") {
    CHECK(normal_form(V({"0"}), {V({"x*y"})}).is_zero());
    CHECK(normal_form(V({"x*y"}), {V({"x*y"})}).is_zero());
    const auto gb = groebner_basis({V({"x^3 + x^2 - y^2"})});
    CHECK(normal_form(V({"x^3 + x^2"}), gb) == V({"y^2"}));
  }

  TEST_CASE("groebner basis examples") {
    const auto single = groebner_basis({V({"x^3 + x^2 - y^2"})});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == V({"x^3 + x^2 - y^2"}));

    const auto wedge = groebner_basis({V({"2*y"}), V({"3*x^2 + 2*x"}), V({"x^3 + x^2 - y^2"})});
    CHECK(quotient_dimension(wedge, 1) == Dimension::finite(1));
    CHECK(normal_form(V({"x"}), wedge).is_zero());
    CHECK(normal_form(V({"y"}), wedge).is_zero());

    const auto xy = groebner_basis({V({"x*y"}), V({"x + y"})});
    CHECK(std::find(xy.begin(), xy.end(), V({"x + y"})) != xy.end());
    CHECK(std::find(xy.begin(), xy.end(), V({"y^2"})) != xy.end());
    CHECK(quotient_dimension(xy, 1) == Dimension::finite(2));
  }

  TEST_CASE("reduced bases are monic and deterministic") {
    const auto a = groebner_basis({V({"2*x^2 - 4*y"}), V({"3*x*y + 1"})});
    const auto b = groebner_basis({V({"3*x*y + 1"}), V({"2*x^2 - 4*y"})});
    CHECK(a == b);
    for (const auto& g : a) CHECK(leading_term(g, {}).coefficient == 1);
  }

  TEST_CASE("quotient dimension examples") {
    CHECK(quotient_dimension({V({"x"}), V({"y"})}, 1) == Dimension::finite(1));
    CHECK(quotient_dimension({V({"x^2"}), V({"x*y"}), V({"y^2"})}, 1) == Dimension::finite(3));
    CHECK(quotient_dimension({V({"2*y"}), V({"3*x^2 + 2*x"}), V({"x^3 + x^2 - y^2"})}, 1) == Dimension::finite(1));
    CHECK_FALSE(quotient_dimension({V({"x*y"})}, 1).is_finite());
    CHECK(quotient_dimension({V({"1"})}, 1) == Dimension::finite(0));
    CHECK(quotient_dimension({V({"x", "0"}), V({"y", "0"}), V({"0", "1"})}, 2) == Dimension::finite(1));
  }

  TEST_CASE("syzygies examples") {
    const ModuleMap m = ModuleMap::parse(qxy(), {{"x", "y"}}, 2);
    const ModuleMap s = syzygies(m);
    CHECK(m.compose(s).is_zero());
    REQUIRE(s.cols() == 1);
    const FreeElement k = s.column(0);
    CHECK((k == V({"y", "-x"}) || k == V({"-y", "x"})));

    const ModuleMap zero(qxy(), 1, 2);
    const ModuleMap all = syzygies(zero);
    REQUIRE(all.cols() == 2);
    const std::vector<FreeElement> cols{all.column(0), all.column(1)};
    CHECK(std::find(cols.begin(), cols.end(), V({"1", "0"})) != cols.end());
    CHECK(std::find(cols.begin(), cols.end(), V({"0", "1"})) != cols.end());
  }

  TEST_CASE("syzygies over the node chart contain the corrected kernel element") {
    auto R = Ring::quotient(qxy(), {P("x^3 + x^2 - y^2")});
    const ModuleMap m = ModuleMap::parse(R, {{"2*y", "3*x^2 + 2*x"}}, 2);
    const ModuleMap s = syzygies(m);
    CHECK(m.compose(s).is_zero_in_ring());
    const FreeElement corrected = V({"(3*x + 2)*y", "-2*x^2 - 2*x"}, R);
    CHECK(lift(s, corrected).has_value());
    const FreeElement printed = V({"(3*x + 2)*y", "2*x^2 + 2*x"}, R);
    CHECK_FALSE(lift(s, printed).has_value());
  }

  TEST_CASE("lift solves m a = v") {
    const ModuleMap m = ModuleMap::parse(qxy(), {{"x", "y"}}, 2);
    const auto a = lift(m, V({"x^2 + y^3"}));
    REQUIRE(a.has_value());
    CHECK(m.apply(*a) == V({"x^2 + y^3"}));
    CHECK_FALSE(lift(m, V({"1"})).has_value());
  }

  TEST_CASE("property: random ideals") {
    testing::PolyGen gen;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FreeElement> gens;
      const unsigned n = gen.pick(1, 3);
      for (unsigned i = 0; i < n; ++i) gens.push_back(FreeElement({gen.poly(3, 3)}));
      const auto gb = groebner_basis(gens);
      for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j)
          if (auto s = s_vector(gb[i], gb[j], {})) CHECK(normal_form(*s, gb).is_zero());
      const FreeElement f({gen.poly(4, 4)});
      const FreeElement r = normal_form(f, gb);
      CHECK(normal_form(r, gb) == r);
      const Dimension d = quotient_dimension(gens, 1);
      if (d.is_finite()) CHECK(quotient_dimension(gens, 1, MonomialOrder::lex_pot()) == d);
    }
  }

  TEST_CASE("property: random submodules of a rank-2 module") {
    testing::PolyGen gen(7u);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<FreeElement> gens;
      const unsigned n = gen.pick(1, 3);
      for (unsigned i = 0; i < n; ++i) gens.push_back(FreeElement({gen.poly(2, 2), gen.poly(2, 2)}));
      for (const auto& order : {MonomialOrder::grevlex_pot(), MonomialOrder::grevlex_top()}) {
        const auto gb = groebner_basis(gens, order);
        for (const auto& g : gens) CHECK(normal_form(g, gb, order).is_zero());
        for (std::size_t i = 0; i < gb.size(); ++i)
          for (std::size_t j = i + 1; j < gb.size(); ++j)
            if (auto s = s_vector(gb[i], gb[j], order)) CHECK(normal_form(*s, gb, order).is_zero());
      }
      const ModuleMap m = ModuleMap::from_columns(qxy(), 2, gens);
      CHECK(m.compose(syzygies(m)).is_zero());
    }
  }
}
