// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curvehom/oracle.hpp"
#include "curvehom/spectral.hpp"

using namespace curvehom;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const std::vector<CurveSpec>& matrix() {
  static const std::vector<CurveSpec> s = {CurveSpec::nodal(1, 1), CurveSpec::nodal(2, 1), CurveSpec::nodal(2, 2),
                                           CurveSpec::nodal(3, 1), CurveSpec::nodal(3, 3)};
  return s;
}

Polynomial P(const char* s) { return Polynomial::parse(local_ring(), s); }

void local_tables() {
  const auto node = local_invariants(SingularityModel::NodalCubic);
  for (int k = 2; k <= 5; ++k) {
    const DgModule m = wedge_power(SingularityModel::NodalCubic, static_cast<unsigned>(k));
    for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) {
      const std::size_t want = (i == -k + 2 || i == -k + 1) ? 1 : 0;
      expect(homology_dimension(m.complex, i) == Dimension::finite(want),
             "H^" + std::to_string(i) + " of wedge^" + std::to_string(k));
    }
  }
  const ChainComplex c = chart_complex(SingularityModel::NodalCubic);
  expect(homology_dimension(c, 0) == Dimension::finite(1), "chart complex H^0");
  expect(homology_dimension(c, -1) == Dimension::finite(1), "chart complex H^-1");
  const DgModule cusp = wedge_power(SingularityModel::CuspidalCubic, 2);
  expect(homology_dimension(cusp.complex, 0) == Dimension::finite(2), "cusp wedge^2 H^0");
  expect(homology_dimension(cusp.complex, -1) == Dimension::finite(2), "cusp wedge^2 H^-1");
}

void witnesses() {
  const auto model = SingularityModel::NodalCubic;
  const DgModule w2 = wedge_power(model, 2);
  const FreeElement v({P("-3*x*y - 2*y"), P("2*x^2 + 2*x"), P("6*x + 4")});
  expect(w2.complex.differential(-1).apply(v).is_zero(), "witness is a cycle");
  const FreeElement img = de_rham(model, 2).component(-1).apply(v);
  expect(img == FreeElement({P("13*x + 8")}), "d^dR of the witness is (13x+8) dx dy de");
  const DgModule w3 = wedge_power(model, 3);
  expect(!homology_at(w3.complex, -1).is_zero_class(img), "image class is nonzero");
  expect(crossing_composite().rank() == 1, "crossing composite has rank 1");
  const KernelSignReport k = kernel_sign_check();
  expect(k.corrected_is_cycle && k.corrected_spans_homology && !k.printed_is_cycle, "kernel generator sign");
}

void hdr_degeneration() {
  for (const auto& c : matrix()) {
    const SpectralRun r = run_hdr(c);
    expect(r.degeneration_page == 2, c.describe() + " degenerates at E2");
    const BigradedPage& e2 = r.pages.at(1);
    expect(e2.entries == r.limit().entries, c.describe() + " E2 = E_inf");
    for (const auto& [cell, v] : e2.entries) {
      std::size_t want = 0;
      if (cell == Cell{0, 1}) want = c.genus;
      if (cell == Cell{1, 1} || cell == Cell{0, 0}) want = 1;
      if (cell == Cell{1, 0}) want = c.genus - c.nodes;
      expect(v == want, c.describe() + " E2 entry (" + std::to_string(cell.first) + ", " +
                            std::to_string(cell.second) + ")");
    }
  }
}

void rank_deduction() {
  for (const auto& c : matrix()) {
    BigradedPage page = build_hdr_e1(c);
    for (auto& [cell, d] : page.differentials)
      if (d.name == "alpha" || d.name == "sigma") d = RankDatum::unknown(d.name);
    expect(!page.unknowns().empty(), c.describe() + " has unknown ranks");
    const auto sols = deduce_forced_ranks(page, singular_cohomology(c), {0, 1, 2});
    expect(sols.size() == 1, c.describe() + " has a unique feasible assignment");
    for (const auto& [key, rank] : sols[0].ranks) expect(rank == 0, c.describe() + " assignment is all zero");
  }
}

void hh_tables() {
  const auto a = hkr_hochschild(CurveSpec::nodal(1, 1), -2, 3);
  const std::vector<std::size_t> want{0, 1, 2, 1, 1, 1};
  for (int n = -2; n <= 3; ++n) expect(a.dim(n) == want[static_cast<std::size_t>(n + 2)], "(1,1) HH_" + std::to_string(n));
  for (const auto& c : matrix()) {
    const auto t = hkr_hochschild(c, -1, 3);
    const std::vector<std::size_t> w{c.genus, 2, c.genus, c.nodes, c.nodes};
    for (int n = -1; n <= 3; ++n)
      expect(t.dim(n) == w[static_cast<std::size_t>(n + 1)], c.describe() + " HH_" + std::to_string(n));
  }
  const auto cusp = hkr_hochschild(CurveSpec::cuspidal_cubic(), -1, 2);
  const std::vector<std::size_t> w{1, 3, 2, 2};
  for (int n = -1; n <= 2; ++n) expect(cusp.dim(n) == w[static_cast<std::size_t>(n + 1)], "cusp HH_" + std::to_string(n));
}

void hn_tables() {
  std::vector<CurveSpec> all = matrix();
  all.push_back(CurveSpec::cuspidal_cubic());
  for (const auto& c : all) {
    const auto hn = hn_table(c, -8, 8);
    for (int n = -8; n <= 8; ++n) {
      std::size_t want = 0;
      if (c.kind == CurveKind::CuspidalCubic) want = n == 0 ? 3 : n % 2 == 0 ? 2 : 0;
      else if (n <= 0) want = n % 2 == 0 ? 2 : 2 * c.genus - c.nodes;
      else if (n == 1) want = c.genus - c.nodes;
      else if (n % 2 == 0) want = c.nodes;
      expect(hn.dim(n) == want, c.describe() + " HN_" + std::to_string(n));
    }
    const FiltrationChart ch = hn_chart(c, -8, 8);
    for (int n = -8; n <= 8; ++n) expect(ch.column_sum(-n) == hn.dim(n), c.describe() + " chart column " + std::to_string(-n));
    const auto sing = singular_cohomology(c);
    for (const auto& [k, row] : ch.rows)
      if (k <= 0)
        for (int d = 0; d <= 2; ++d)
          if (std::abs(d - 2 * k) <= 8)
            expect(ch.at(k, d - 2 * k) == sing.dim(d), c.describe() + " gr^" + std::to_string(k));
  }
}

void hc_liftability() {
  for (const auto& c : matrix())
    expect(degeneration_page(c, SpectralKind::HochschildCyclic) == 2, c.describe() + " HC degenerates at E2");
  for (const auto& c : {CurveSpec::nodal(1, 1), CurveSpec::cuspidal_cubic()}) {
    const auto hn = hn_table(c, -8, 10);
    const auto hh = hkr_hochschild(c, -8, 10);
    for (int n = -8; n <= 10; ++n) {
      bool iso = n >= 0 && n % 2 == 0;
      if (c.is_nodal_cubic() && n == -1) iso = true;
      const MapClass m = hn_to_hh(c, n);
      expect(m == (iso ? MapClass::Iso : MapClass::Zero), c.describe() + " HN_" + std::to_string(n) + " -> HH");
      if (iso) expect(hn.dim(n) == hh.dim(n), c.describe() + " HN = HH at " + std::to_string(n));
    }
  }
}

void properties() {
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, 3);
  auto random_poly = [&] {
    Polynomial p(local_ring());
    for (int t = 0; t < 3; ++t)
      p += Polynomial::monomial(local_ring(), Monomial{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))},
                                coef(rng));
    return p;
  };
  for (auto model : kAllModels)
    for (unsigned k = 0; k <= 5; ++k) {
      const DgModule m = wedge_power(model, k);
      for (int i = m.complex.lo(); i < m.complex.hi(); ++i)
        expect(m.complex.differential(i + 1).compose(m.complex.differential(i)).is_zero(), "Delta^2 = 0");
      const ChainMap d1 = de_rham(model, k), d2 = de_rham(model, k + 1);
      for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) {
        std::vector<Polynomial> c;
        for (std::size_t j = 0; j < m.complex.rank(i); ++j) c.push_back(random_poly());
        expect(d2.component(i).apply(d1.component(i).apply(FreeElement(c))).is_zero(), "(d^dR)^2 = 0");
      }
      for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) {
        const OracleCount o = oracle_homology(m.complex, i, 8);
        expect(o.agrees_with(homology_dimension(m.complex, i)),
               model_name(model) + " wedge^" + std::to_string(k) + " H^" + std::to_string(i) + " vs oracle");
      }
    }
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FreeElement> gens{FreeElement({random_poly()}), FreeElement({random_poly()})};
    const auto gb = groebner_basis(gens);
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        if (auto s = s_vector(gb[i], gb[j], {})) expect(normal_form(*s, gb).is_zero(), "S-vector reduces to zero");
  }
  std::vector<CurveSpec> all = matrix();
  all.push_back(CurveSpec::cuspidal_cubic());
  for (const auto& c : all)
    for (const SpectralRun& r : {run_hdr(c), run_hc(c)})
      for (std::size_t i = 0; i + 1 < r.pages.size(); ++i) {
        long leak = 0;
        const BigradedPage& p = r.pages[i];
        for (const auto& [cell, d] : p.differentials)
          if (d.known() && !p.region.contains(p.target(cell)))
            leak += ((cell.first + cell.second) % 2 == 0 ? 1 : -1) * static_cast<long>(*d.rank);
        expect(r.pages[i + 1].euler_characteristic() == p.euler_characteristic() - leak, c.describe() + " page Euler");
      }
  for (const auto& c : {CurveSpec::nodal(1, 1), CurveSpec::cuspidal_cubic()}) {
    const EulerReport e = euler_check(c);
    expect(e.ok && e.chi_l_x == 0 && e.chi_o_x == 0, "Riemann-Roch for " + c.describe());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"local cohomology tables", local_tables},
      {"witness cycle, crossing composite and kernel sign", witnesses},
      {"Hodge-to-de Rham degeneration at E2", hdr_degeneration},
      {"forced ranks from the abutment", rank_deduction},
      {"Hochschild homology tables", hh_tables},
      {"negative cyclic tables and charts", hn_tables},
      {"cyclic degeneration and liftability", hc_liftability},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    ++index;
    std::string detail;
    bool ok = true;
    try {
      run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
    if (!ok) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed in "
            << t.str() << " s\n";
  return failed == 0 ? 0 : 1;
}
