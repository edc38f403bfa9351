#include "curvehom/local_models.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace curvehom;

namespace {

RingPtr R() { return local_ring(); }
Polynomial P(const char* s) { return Polynomial::parse(R(), s); }

}  // namespace

TEST_SUITE("local-models") {
  TEST_CASE("model names") {
    for (auto m : kAllModels) CHECK(parse_model(model_name(m)) == m);
    CHECK(parse_model("cusp") == SingularityModel::CuspidalCubic);
    CHECK(parse_model("nodal") == SingularityModel::NodalCubic);
    CHECK_THROWS_AS(parse_model("tacnode"), InputError);
  }

  TEST_CASE("dg algebras") {
    CHECK(build_dg_algebra(SingularityModel::NodalCubic).delta_eps == P("x^3 + x^2 - y^2"));
    CHECK(build_dg_algebra(SingularityModel::Crossing).delta_eps == P("x*y"));
    CHECK(build_dg_algebra(SingularityModel::CuspidalCubic).delta_eps == P("x^3 - y^2"));
    for (auto m : kAllModels) {
      const auto a = build_dg_algebra(m);
      CHECK_FALSE(homology_dimension(a.complex, 0).is_finite());
      CHECK(homology_dimension(a.complex, -1) == Dimension::finite(0));
    }
  }

  TEST_CASE("wedge basis order and degrees") {
    const auto b = wedge_basis(2, -1);
    REQUIRE(b.size() == 3);
    CHECK(b[0].label() == "dx*de");
    CHECK(b[1].label() == "dy*de");
    CHECK(b[2].label() == "eps*dx*dy");
    for (const auto& s : b) {
      CHECK(s.degree() == -1);
      CHECK(s.weight() == 2);
    }
    CHECK(wedge_basis(0, 0).front().label() == "1");
  }

  TEST_CASE("wedge^0 resolves the local ring") {
    const DgModule w = wedge_power(SingularityModel::NodalCubic, 0);
    CHECK_FALSE(homology_dimension(w.complex, 0).is_finite());
    for (int i = w.complex.lo(); i < 0; ++i) CHECK(homology_dimension(w.complex, i) == Dimension::finite(0));
  }

  TEST_CASE("Delta on wedge^2 in degree -1") {
    const DgModule w = wedge_power(SingularityModel::NodalCubic, 2);
    const ModuleMap d = w.complex.differential(-1);
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 3);
    CHECK(d.at(0, 0) == P("-2*y"));
    CHECK(d.at(0, 1) == P("-3*x^2 - 2*x"));
    CHECK(d.at(0, 2) == P("x^3 + x^2 - y^2"));
  }

  TEST_CASE("wedge^3 at the node") {
    const DgModule w = wedge_power(SingularityModel::NodalCubic, 3);
    CHECK(w.complex.hi() == -1);
    CHECK(homology_dimension(w.complex, -1) == Dimension::finite(1));
    CHECK(homology_dimension(w.complex, -2) == Dimension::finite(1));
    CHECK(homology_dimension(w.complex, -3) == Dimension::finite(0));
    CHECK(euler_characteristic(w.complex) == 0);
    const auto g = homology_generators(w.complex, -1);
    REQUIRE(g.size() == 1);
    CHECK(w.render(-1, g[0]) == "dx*dy*de");
  }

  TEST_CASE("generators of wedge^2 at the node") {
    const DgModule w = wedge_power(SingularityModel::NodalCubic, 2);
    const auto g0 = homology_generators(w.complex, 0);
    REQUIRE(g0.size() == 1);
    CHECK(w.render(0, g0[0]) == "dx*dy");
    const auto g1 = homology_generators(w.complex, -1);
    REQUIRE(g1.size() == 1);
    // The witness cycle is twice this generator.
    const FreeElement candidate({P("-3*x*y - 2*y"), P("2*x^2 + 2*x"), P("6*x + 4")});
    const PresentedModule h = homology_at(w.complex, -1);
    CHECK(h.contains(candidate));
    CHECK_FALSE(h.is_zero_class(candidate));
    CHECK((candidate - Rational(2) * g1[0]).is_zero());
  }

  TEST_CASE("de Rham differential") {
    const auto one = apply_de_rham(P("1"), WedgeSymbol{});
    CHECK(one.empty());
    const auto x = apply_de_rham(P("x"), WedgeSymbol{});
    REQUIRE(x.size() == 1);
    CHECK(x[0].second.label() == "dx");
    CHECK(x[0].first == P("1"));

    const auto model = SingularityModel::NodalCubic;
    const FreeElement v({P("-3*x*y - 2*y"), P("2*x^2 + 2*x"), P("6*x + 4")});
    const FreeElement img = de_rham(model, 2).component(-1).apply(v);
    CHECK(img == FreeElement({P("13*x + 8")}));
    const RationalMatrix m = induced_map(de_rham(model, 2), -1);
    CHECK(m.rank() == 1);
    CHECK(induced_rank(de_rham(model, 2), -1) == Dimension::finite(1));
  }

  TEST_CASE("local tables") {
    const auto node = local_cohomology_table(SingularityModel::NodalCubic, 5);
    for (const auto& row : node) {
      if (row.k < 2) continue;
      const int k = static_cast<int>(row.k);
      for (const auto& [i, d] : row.dims) {
        const std::size_t want = (i == -k + 2 || i == -k + 1) ? 1 : 0;
        CHECK(d == Dimension::finite(want));
      }
    }
    const auto cusp = local_cohomology_table(SingularityModel::CuspidalCubic, 2);
    CHECK(cusp[2].dims.at(0) == Dimension::finite(2));
    CHECK(cusp[2].dims.at(-1) == Dimension::finite(2));
    CHECK(cusp[2].dims.at(-2) == Dimension::finite(0));
  }

  TEST_CASE("shift rule beyond the computed weights") {
    CHECK(local_dimension(SingularityModel::NodalCubic, 9, -7).get() == 1);
    CHECK(local_dimension(SingularityModel::NodalCubic, 9, -8).get() == 1);
    CHECK(local_dimension(SingularityModel::NodalCubic, 9, -6).get() == 0);
    CHECK(local_dimension(SingularityModel::CuspidalCubic, 8, -6).get() == 2);
  }

  TEST_CASE("chart complex and the kernel sign") {
    const ChainComplex c = chart_complex(SingularityModel::NodalCubic);
    CHECK(homology_dimension(c, 0) == Dimension::finite(1));
    CHECK(homology_dimension(c, -1) == Dimension::finite(1));
    CHECK(homology_dimension(c, -2) == Dimension::finite(0));
    CHECK(euler_characteristic(c) == 0);
    const auto g0 = homology_generators(c, 0);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].to_string() == FreeElement({Polynomial::parse(c.ring(), "1")}).to_string());
    const KernelSignReport k = kernel_sign_check();
    CHECK_FALSE(k.printed_is_cycle);
    CHECK(k.corrected_is_cycle);
    CHECK(k.corrected_spans_homology);
  }

  TEST_CASE("crossing torsion and composite") {
    const PresentedModule t = torsion_of_cotangent(SingularityModel::Crossing);
    REQUIRE(t.dimension() == Dimension::finite(1));
    const auto basis = t.basis();
    REQUIRE(basis.size() == 1);
    // x dy in the basis (dx, dy) of wedge^1, up to a scalar
    CHECK(basis[0].coords[0].is_zero());
    CHECK(basis[0].coords[1].terms().size() == 1);
    CHECK(basis[0].coords[1].terms()[0].first == Monomial{1, 0});
    const DgModule w1 = wedge_power(SingularityModel::Crossing, 1);
    const PresentedModule h0 = homology_at(w1.complex, 0);
    CHECK(h0.is_zero_class(FreeElement({P("0"), P("x^2")})));
    CHECK_FALSE(h0.is_zero_class(FreeElement({P("0"), P("x")})));
    CHECK(crossing_composite().rank() == 1);
    CHECK(local_invariants(SingularityModel::CuspidalCubic).torsion_dim == 2);
  }

  TEST_CASE("property: differentials square to zero and d^dR is a chain map") {
    testing::PolyGen gen(5u);
    for (auto model : kAllModels)
      for (unsigned k = 0; k <= 4; ++k) {
        CAPTURE(model_name(model));
        CAPTURE(k);
        const DgModule m = wedge_power(model, k);
        for (int i = m.complex.lo(); i < m.complex.hi(); ++i)
          CHECK(m.complex.differential(i + 1).compose(m.complex.differential(i)).is_zero());
        const ChainMap d1 = de_rham(model, k);  // constructor checks d Delta = Delta d
        const ChainMap d2 = de_rham(model, k + 1);
        for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) {
          std::vector<Polynomial> c;
          for (std::size_t j = 0; j < m.complex.rank(i); ++j) c.push_back(gen.poly(3, 3, R()));
          CHECK(d2.component(i).apply(d1.component(i).apply(FreeElement(c))).is_zero());
        }
      }
  }

  TEST_CASE("property: d^dR on random elements") {
    testing::PolyGen gen(99u);
    const auto model = SingularityModel::CuspidalCubic;
    const DgModule w2 = wedge_power(model, 2);
    const ChainMap d = de_rham(model, 2), dd = de_rham(model, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> c;
      for (std::size_t j = 0; j < w2.complex.rank(-1); ++j) c.push_back(gen.poly(3, 3, R()));
      const FreeElement v(c);
      CHECK(dd.component(-1).apply(d.component(-1).apply(v)).is_zero());
      const FreeElement lhs = wedge_power(model, 3).complex.differential(-1).apply(d.component(-1).apply(v));
      const FreeElement rhs = d.component(0).apply(w2.complex.differential(-1).apply(v));
      CHECK(lhs == rhs);
    }
  }
}
