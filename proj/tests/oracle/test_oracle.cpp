// Groebner-pipeline results against the truncated linear-algebra count.
#include "curvehom/local_models.hpp"
#include "curvehom/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace curvehom;

TEST_SUITE("oracle") {
  TEST_CASE("local-model corpus") {
    const unsigned D = oracle_degree();
    for (auto model : kAllModels)
      for (unsigned k = 0; k <= 5; ++k) {
        const DgModule m = wedge_power(model, k);
        for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) {
          CAPTURE(model_name(model));
          CAPTURE(k);
          CAPTURE(i);
          const Dimension d = homology_dimension(m.complex, i);
          const OracleCount o = oracle_homology(m.complex, i, D);
          CAPTURE(o.dim);
          CAPTURE(o.dim_below);
          CHECK(o.agrees_with(d));
        }
      }
  }

  TEST_CASE("Koszul complexes") {
    const auto r = testing::qxy();
    const ModuleMap d2 = ModuleMap::parse(r, {{"y^2"}, {"-x"}}, 1);
    const ModuleMap d1 = ModuleMap::parse(r, {{"x", "y^2"}}, 2);
    const ChainComplex k(r, -2, {1, 2, 1}, {d2, d1});
    for (int i = -2; i <= 0; ++i) CHECK(oracle_homology(k, i, oracle_degree()).agrees_with(homology_dimension(k, i)));
    CHECK(homology_dimension(k, 0) == Dimension::finite(2));
  }

  TEST_CASE("property: syzygies are complete up to the truncation degree") {
    testing::PolyGen gen(31u);
    const auto r = testing::qxy();
    for (int trial = 0; trial < 12; ++trial) {
      const unsigned rows = gen.pick(1, 2), cols = gen.pick(2, 3);
      std::vector<FreeElement> columns;
      for (unsigned c = 0; c < cols; ++c) {
        std::vector<Polynomial> entries;
        for (unsigned j = 0; j < rows; ++j) entries.push_back(gen.poly(2, 2));
        columns.emplace_back(entries);
      }
      const ModuleMap m = ModuleMap::from_columns(r, rows, columns);
      const ModuleMap s = syzygies(m);
      const ChainComplex c(r, -1, {s.cols(), cols, rows}, {s, m});
      const OracleCount o = oracle_homology(c, 0, 6);
      CAPTURE(m.to_string());
      CHECK(o.dim == 0);
      CHECK(o.dim_below == 0);
    }
  }

  TEST_CASE("quotient rings are out of scope for the oracle") {
    CHECK_THROWS_AS(oracle_homology(chart_complex(SingularityModel::NodalCubic), 0, 4), UnsupportedError);
  }
}
