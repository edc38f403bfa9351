#include "curvehom/curve_tables.hpp"
#include "doctest.h"

using namespace curvehom;

namespace {

const std::vector<CurveSpec>& specs() {
  static const std::vector<CurveSpec> s = {CurveSpec::nodal(0, 0), CurveSpec::nodal(1, 0), CurveSpec::nodal(1, 1),
                                           CurveSpec::nodal(2, 1), CurveSpec::nodal(2, 2), CurveSpec::nodal(3, 1),
                                           CurveSpec::nodal(3, 3), CurveSpec::nodal(5, 2)};
  return s;
}

}  // namespace

TEST_SUITE("curve-tables") {
  TEST_CASE("curve specs") {
    CHECK_THROWS_AS(CurveSpec::nodal(1, 2), InputError);
    CHECK(CurveSpec::nodal(1, 1).is_nodal_cubic());
    CHECK(CurveSpec::nodal(3, 2).normalization_genus() == 1);
    CHECK(CurveSpec::cuspidal_cubic().model() == SingularityModel::CuspidalCubic);
    CHECK(CurveSpec::nodal(1, 1).describe() == "nodal(g=1,n=1)");
    CHECK(CurveSpec::cuspidal_cubic().describe() == "cuspidal-cubic");
  }

  TEST_CASE("cotangent cohomology") {
    const auto a = cotangent_cohomology(CurveSpec::nodal(1, 1));
    CHECK(a.dim(0) == 1);
    CHECK(a.dim(1) == 1);
    const auto b = cotangent_cohomology(CurveSpec::nodal(3, 2));
    CHECK(b.dim(0) == 3);
    CHECK(b.dim(1) == 1);
    const auto c = cotangent_cohomology(CurveSpec::cuspidal_cubic());
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(1) == 2);
    CHECK(c.inferred);
    CHECK_FALSE(c.note.empty());
    CHECK_FALSE(a.inferred);
  }

  TEST_CASE("wedge hypercohomology") {
    const auto w0 = wedge_hypercohomology(CurveSpec::nodal(2, 1), 0);
    CHECK(w0.dim(0) == 1);
    CHECK(w0.dim(1) == 2);
    const auto w3 = wedge_hypercohomology(CurveSpec::nodal(1, 1), 3);
    CHECK(w3.dim(-1) == 1);
    CHECK(w3.dim(-2) == 1);
    CHECK(w3.dim(0) == 0);
    const auto w22 = wedge_hypercohomology(CurveSpec::nodal(2, 2), 2);
    CHECK(w22.dim(0) == 2);
    CHECK(w22.dim(-1) == 2);
    const auto cusp = wedge_hypercohomology(CurveSpec::cuspidal_cubic(), 2);
    CHECK(cusp.dim(0) == 2);
    CHECK(cusp.dim(-1) == 2);
  }

  TEST_CASE("singular cohomology") {
    const auto a = singular_cohomology(CurveSpec::nodal(1, 1));
    CHECK(a.window(0, 2) == std::vector<std::pair<int, std::size_t>>{{0, 1}, {1, 1}, {2, 1}});
    const auto b = singular_cohomology(CurveSpec::nodal(2, 1));
    CHECK(b.dim(1) == 3);
    const auto c = singular_cohomology(CurveSpec::cuspidal_cubic());
    CHECK(c.window(0, 2) == std::vector<std::pair<int, std::size_t>>{{0, 1}, {1, 0}, {2, 1}});
  }

  TEST_CASE("HKR Hochschild tables") {
    const auto a = hkr_hochschild(CurveSpec::nodal(1, 1), -2, 6);
    CHECK(a.convention == "homological");
    const std::vector<std::size_t> want{0, 1, 2, 1, 1, 1, 1, 1, 1};
    for (int n = -2; n <= 6; ++n) CHECK(a.dim(n) == want[static_cast<std::size_t>(n + 2)]);

    for (const auto& c : specs()) {
      CAPTURE(c.describe());
      const auto t = hkr_hochschild(c, -3, 8);
      CHECK(t.dim(-2) == 0);
      CHECK(t.dim(-1) == c.genus);
      CHECK(t.dim(0) == 2);
      CHECK(t.dim(1) == c.genus);
      for (int n = 2; n <= 8; ++n) CHECK(t.dim(n) == c.nodes);
    }

    const auto z = hkr_hochschild(CurveSpec::nodal(0, 0), -5, 5);
    for (int n = -5; n <= 5; ++n) CHECK(z.dim(n) == (n == 0 ? 2u : 0u));

    const auto cusp = hkr_hochschild(CurveSpec::cuspidal_cubic(), -2, 4);
    CHECK(cusp.dim(-2) == 0);
    CHECK(cusp.dim(-1) == 1);
    CHECK(cusp.dim(0) == 3);
    CHECK(cusp.dim(1) == 2);
    CHECK(cusp.dim(2) == 2);
  }

  TEST_CASE("property: HKR is the diagonal sum of wedge tables") {
    for (const auto& c : specs()) {
      CAPTURE(c.describe());
      const auto hh = hkr_hochschild(c, -2, 6);
      for (int n = -2; n <= 6; ++n) {
        std::size_t sum = 0;
        for (unsigned q = 0; q <= 10; ++q) sum += wedge_hypercohomology(c, q).dim(static_cast<int>(q) - n);
        CHECK(hh.dim(n) == sum);
      }
    }
  }

  TEST_CASE("property: locality of wedge powers k >= 2") {
    for (const auto& c : specs()) {
      for (unsigned k = 2; k <= 5; ++k) {
        const auto w = wedge_hypercohomology(c, k);
        for (int i = -8; i <= 2; ++i)
          CHECK(w.dim(i) == c.nodes * local_dimension(SingularityModel::NodalCubic, k, i).get());
      }
    }
  }

  TEST_CASE("Euler characteristic via Riemann-Roch") {
    CHECK(chi_projective_plane(1) == 3);
    CHECK(chi_projective_plane(0) == 1);
    CHECK(chi_projective_plane(-3) == 1);
    CHECK(chi_plane_cubic(0) == 0);
    for (const auto& c : {CurveSpec::nodal(1, 1), CurveSpec::cuspidal_cubic()}) {
      const EulerReport r = euler_check(c);
      CHECK(r.ok);
      CHECK(r.chi_o_x == 0);
      CHECK(r.chi_l_x == 0);
      CHECK(r.chi_o_p2_1 == 3);
    }
    CHECK_THROWS_AS(euler_check(CurveSpec::nodal(2, 1)), InputError);
  }

  TEST_CASE("tables alternate and window") {
    HomologyTable t;
    t.set(0, 2);
    t.set(1, 3);
    CHECK(t.alternating_sum() == -1);
    CHECK(t.window(-1, 1).size() == 3);
    CHECK(t.dim(7) == 0);
  }
}
