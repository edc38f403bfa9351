#include "curvehom/local_models.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace curvehom {

std::string model_name(SingularityModel model) {
  switch (model) {
    case SingularityModel::NodalCubic: return "nodal-cubic-chart";
    case SingularityModel::Crossing: return "crossing";
    case SingularityModel::CuspidalCubic: return "cuspidal-cubic-chart";
  }
  return "unknown";
}

SingularityModel parse_model(std::string_view name) {
  if (name == "nodal-cubic-chart" || name == "nodal" || name == "node") return SingularityModel::NodalCubic;
  if (name == "crossing") return SingularityModel::Crossing;
  if (name == "cuspidal-cubic-chart" || name == "cusp" || name == "cuspidal") return SingularityModel::CuspidalCubic;
  throw InputError("unknown singularity model '" + std::string(name) +
                   "' (expected nodal-cubic-chart, crossing or cuspidal-cubic-chart)");
}

RingPtr local_ring() {
  static const RingPtr ring = Ring::polynomial({"x", "y"});
  return ring;
}

Polynomial model_relation(SingularityModel model) {
  switch (model) {
    case SingularityModel::NodalCubic: return Polynomial::parse(local_ring(), "x^3 + x^2 - y^2");
    case SingularityModel::Crossing: return Polynomial::parse(local_ring(), "x*y");
    case SingularityModel::CuspidalCubic: return Polynomial::parse(local_ring(), "x^3 - y^2");
  }
  throw InputError("unknown singularity model");
}

// -- symbols ------------------------------------------------------------------

std::string WedgeSymbol::label() const {
  std::vector<std::string> parts;
  if (e) parts.emplace_back("eps");
  if (a) parts.emplace_back("dx");
  if (b) parts.emplace_back("dy");
  if (c == 1) parts.emplace_back("de");
  if (c > 1) parts.push_back("de^" + std::to_string(c));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

std::vector<WedgeSymbol> wedge_basis(unsigned k, int degree) {
  std::vector<WedgeSymbol> out;
  for (unsigned e : {0u, 1u})
    for (unsigned a : {1u, 0u})
      for (unsigned b : {1u, 0u}) {
        if (a + b > k) continue;
        WedgeSymbol s{e, a, b, k - a - b};
        if (s.degree() == degree) out.push_back(s);
      }
  return out;
}

namespace {

int sign(unsigned exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::size_t index_of(const std::vector<WedgeSymbol>& basis, const WedgeSymbol& s) {
  auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) throw PreconditionError("symbol " + s.label() + " missing from the basis");
  return static_cast<std::size_t>(it - basis.begin());
}

int lowest_degree(unsigned k) { return -static_cast<int>(k) - 1; }
int highest_degree(unsigned k) { return k <= 2 ? 0 : -static_cast<int>(k - 2); }

}  // namespace

// Delta(eps^e dx^a dy^b de^c), Leibniz with sign (-1)^(degree of the prefix):
//   e = 1 contributes f * dx^a dy^b de^c,
//   each de contributes df = f_x dx + f_y dy, moved past eps and dx^a dy^b.
std::vector<std::pair<Polynomial, WedgeSymbol>> apply_delta(SingularityModel model, const Polynomial& p,
                                                            const WedgeSymbol& s) {
  const Polynomial f = model_relation(model);
  std::vector<std::pair<Polynomial, WedgeSymbol>> out;
  if (s.e == 1) out.emplace_back(p * f, WedgeSymbol{0, s.a, s.b, s.c});
  if (s.c >= 1) {
    const Rational c(s.c);
    if (s.a == 0)
      out.emplace_back(p * f.derivative(0) * Rational(c * sign(s.e + s.b)), WedgeSymbol{s.e, 1, s.b, s.c - 1});
    if (s.b == 0)
      out.emplace_back(p * f.derivative(1) * Rational(c * sign(s.e)), WedgeSymbol{s.e, s.a, 1, s.c - 1});
  }
  return out;
}

// d(p eps^e dx^a dy^b de^c) = p_x dx ... + p_y dy ... + p d(eps) ..., with
// dx, dy commuting past eps and d(eps) = de moved past dx^a dy^b.
std::vector<std::pair<Polynomial, WedgeSymbol>> apply_de_rham(const Polynomial& p, const WedgeSymbol& s) {
  std::vector<std::pair<Polynomial, WedgeSymbol>> out;
  if (s.a == 0) out.emplace_back(p.derivative(0), WedgeSymbol{s.e, 1, s.b, s.c});
  if (s.b == 0) out.emplace_back(p.derivative(1) * Rational(sign(s.a)), WedgeSymbol{s.e, s.a, 1, s.c});
  if (s.e == 1) out.emplace_back(p * Rational(sign(s.a + s.b)), WedgeSymbol{0, s.a, s.b, s.c + 1});
  std::erase_if(out, [](const auto& term) { return term.first.is_zero(); });
  return out;
}

DgModule wedge_power(SingularityModel model, unsigned k) {
  DgModule out;
  out.model = model;
  out.k = k;
  const RingPtr ring = local_ring();
  const int lo = lowest_degree(k), hi = highest_degree(k);
  std::vector<std::size_t> ranks;
  for (int i = lo; i <= hi; ++i) {
    out.basis[i] = wedge_basis(k, i);
    ranks.push_back(out.basis[i].size());
  }
  const Polynomial one = Polynomial::constant(ring, 1);
  std::vector<ModuleMap> diffs;
  for (int i = lo; i < hi; ++i) {
    const auto& src = out.basis[i];
    const auto& tgt = out.basis[i + 1];
    ModuleMap d(ring, tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [coeff, sym] : apply_delta(model, one, src[j])) {
        const std::size_t r = index_of(tgt, sym);
        d.set(r, j, d.at(r, j) + coeff);
      }
    diffs.push_back(std::move(d));
  }
  out.complex = ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
  for (int i = lo; i <= hi; ++i) {
    std::vector<std::string> labels;
    for (const auto& s : out.basis[i]) labels.push_back(s.label());
    out.complex.set_labels(i, std::move(labels));
  }
  return out;
}

std::string DgModule::render(int degree, const FreeElement& element) const {
  const auto it = basis.find(degree);
  if (it == basis.end() || it->second.size() != element.rank()) throw InputError("element does not match the basis");
  std::string out;
  for (std::size_t j = 0; j < element.rank(); ++j) {
    const Polynomial& p = element.coords[j];
    if (p.is_zero()) continue;
    const std::string label = it->second[j].label();
    std::string term;
    if (label == "1") term = p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    else if (p == Polynomial::constant(p.ring(), 1)) term = label;
    else if (p == Polynomial::constant(p.ring(), -1)) term = "-" + label;
    else if (p.size() == 1) term = p.to_string() + "*" + label;
    else term = "(" + p.to_string() + ")*" + label;
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

DgAlgebra build_dg_algebra(SingularityModel model) {
  DgModule m = wedge_power(model, 0);
  const Polynomial f = model_relation(model);
  const Polynomial delta_eps = m.complex.differential(-1).at(0, 0);
  if (!(delta_eps == f)) throw PreconditionError("differential of eps differs from the relation");
  return DgAlgebra{model, local_ring(), f, delta_eps, std::move(m.complex)};
}

ChainMap de_rham(SingularityModel model, unsigned k) {
  const DgModule src = wedge_power(model, k);
  const DgModule tgt = wedge_power(model, k + 1);
  const RingPtr ring = local_ring();
  const Polynomial one = Polynomial::constant(ring, 1);
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  std::map<int, LinearOperator> comps;
  for (const auto& [i, sbasis] : src.basis) {
    const auto it = tgt.basis.find(i);
    const std::size_t rows = it == tgt.basis.end() ? 0 : it->second.size();
    ModuleMap m0(ring, rows, sbasis.size()), mx(ring, rows, sbasis.size()), my(ring, rows, sbasis.size());
    // The operator is first order, so its values on 1, x, y determine it.
    auto image = [&](const Polynomial& p, const WedgeSymbol& sym) {
      FreeElement v = FreeElement::zero(ring, rows);
      for (const auto& [coeff, t] : apply_de_rham(p, sym)) {
        if (coeff.is_zero()) continue;
        if (it == tgt.basis.end()) throw PreconditionError("de Rham image outside the target window");
        v.coords[index_of(it->second, t)] += coeff;
      }
      return v;
    };
    for (std::size_t j = 0; j < sbasis.size(); ++j) {
      const FreeElement v1 = image(one, sbasis[j]);
      const FreeElement vx = image(x, sbasis[j]) - x * v1;
      const FreeElement vy = image(y, sbasis[j]) - y * v1;
      for (std::size_t r = 0; r < rows; ++r) {
        m0.set(r, j, v1.coords[r]);
        mx.set(r, j, vx.coords[r]);
        my.set(r, j, vy.coords[r]);
      }
    }
    comps.emplace(i, LinearOperator(m0, {mx, my}));
  }
  return ChainMap(src.complex, tgt.complex, std::move(comps));
}

std::vector<LocalTableRow> local_cohomology_table(SingularityModel model, unsigned k_max) {
  std::vector<LocalTableRow> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    const DgModule m = wedge_power(model, k);
    LocalTableRow row{k, {}};
    for (int i = m.complex.lo(); i <= m.complex.hi(); ++i) row.dims.emplace(i, homology_dimension(m.complex, i));
    out.push_back(std::move(row));
  }
  return out;
}

// -- chart complex over the quotient ring ------------------------------------

ChainComplex chart_complex(SingularityModel model) {
  const Polynomial f = model_relation(model);
  const RingPtr r = Ring::quotient(local_ring(), {f});
  const Polynomial fx = f.derivative(0).with_ring(r), fy = f.derivative(1).with_ring(r);
  ModuleMap a = ModuleMap::from_rows(r, {{fx}, {fy}}, 1);
  ModuleMap b = ModuleMap::from_rows(r, {{-fy, fx}}, 2);
  return ChainComplex(r, -2, {1, 2, 1}, {a, b});
}

KernelSignReport kernel_sign_check() {
  const ChainComplex c = chart_complex(SingularityModel::NodalCubic);
  const RingPtr& r = c.ring();
  auto parse = [&](const char* s) { return Polynomial::parse(r, s); };
  KernelSignReport out;
  out.printed = FreeElement({parse("(3*x + 2)*y"), parse("2*(x^2 + x)")});
  out.corrected = FreeElement({parse("(3*x + 2)*y"), parse("-2*(x^2 + x)")});
  const ModuleMap b = c.differential(-1);
  out.printed_is_cycle = reduce_in_ring(b.apply(out.printed)).is_zero();
  out.corrected_is_cycle = reduce_in_ring(b.apply(out.corrected)).is_zero();
  if (out.corrected_is_cycle) {
    const PresentedModule h = homology_at(c, -1);
    const auto coords = h.coordinates(out.corrected);
    out.corrected_spans_homology =
        h.dimension() == Dimension::finite(1) && coords.size() == 1 && coords[0] != 0;
  }
  return out;
}

// -- torsion of the cotangent module -----------------------------------------

namespace {

std::vector<Monomial> monomials_of_degree(unsigned n) {
  std::vector<Monomial> out;
  for (unsigned a = 0; a <= n; ++a) out.push_back(Monomial{n - a, a});
  return out;
}

// { v : m^n v in im(q) } inside the rank-r target of q.
ModuleMap annihilated_by_power(const ModuleMap& q, unsigned n) {
  const RingPtr& ring = q.ring();
  const std::size_t r = q.rows();
  const auto monos = monomials_of_degree(n);
  ModuleMap mult(ring, r * monos.size(), r);
  ModuleMap stacked(ring, r * monos.size(), q.cols() * monos.size());
  for (std::size_t b = 0; b < monos.size(); ++b) {
    const Polynomial s = Polynomial::monomial(ring, monos[b]);
    for (std::size_t i = 0; i < r; ++i) {
      mult.set(b * r + i, i, s);
      for (std::size_t l = 0; l < q.cols(); ++l) stacked.set(b * r + i, b * q.cols() + l, q.at(i, l));
    }
  }
  return kernel_mod(mult, stacked);
}

}  // namespace

PresentedModule torsion_of_cotangent(SingularityModel model) {
  const DgModule m = wedge_power(model, 1);
  const ModuleMap q = m.complex.differential(-1);
  std::optional<PresentedModule> prev;
  for (unsigned n = 1; n <= 12; ++n) {
    PresentedModule t = PresentedModule::subquotient(annihilated_by_power(q, n), q, 0);
    if (prev && prev->dimension() == t.dimension() && t.dimension().is_finite()) return t;
    prev = std::move(t);
  }
  throw UnsupportedError("torsion of the cotangent module did not stabilize");
}

RationalMatrix torsion_composite(SingularityModel model) {
  const PresentedModule torsion = torsion_of_cotangent(model);
  const ChainMap d = de_rham(model, 1);
  const PresentedModule h2 = homology_at(d.target(), 0);
  const auto basis = torsion.basis();
  const std::size_t rows = h2.dimension().get();
  RationalMatrix out(rows, basis.size());
  const LinearOperator d0 = d.component(0);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto coords = h2.coordinates(d0.apply(basis[c]));
    for (std::size_t r = 0; r < rows; ++r) out.at(r, c) = coords[r];
  }
  return out;
}

RationalMatrix crossing_composite() {
  const SingularityModel model = SingularityModel::Crossing;
  const PresentedModule torsion = torsion_of_cotangent(model);
  const RingPtr ring = local_ring();
  // 1 in O_P goes to x dy in L_Z.
  const FreeElement x_dy({Polynomial(ring), Polynomial::variable(ring, 0)});
  const auto coords = torsion.coordinates(x_dy);
  if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; }))
    throw PreconditionError("x dy is not a nonzero torsion class");
  const ChainMap d = de_rham(model, 1);
  const PresentedModule h2 = homology_at(d.target(), 0);
  const auto image = h2.coordinates(d.component(0).apply(x_dy));
  RationalMatrix out(image.size(), 1);
  for (std::size_t r = 0; r < image.size(); ++r) out.at(r, 0) = image[r];
  return out;
}

// -- cached invariants --------------------------------------------------------

namespace {

LocalInvariants compute_invariants(SingularityModel model) {
  LocalInvariants inv;
  inv.table = local_cohomology_table(model, kLocalMaxWeight);
  for (unsigned k = 1; k <= kLocalMaxWeight; ++k) {
    const Dimension r = induced_rank(de_rham(model, k), -static_cast<int>(k) + 1);
    inv.de_rham_rank[k] = r.get();
  }
  const PresentedModule torsion = torsion_of_cotangent(model);
  inv.torsion_dim = torsion.dimension().get();
  inv.torsion_composite_rank = torsion_composite(model).rank();
  return inv;
}

}  // namespace

const LocalInvariants& local_invariants(SingularityModel model) {
  static std::once_flag flags[3];
  static LocalInvariants cache[3];
  const auto idx = static_cast<std::size_t>(model);
  std::call_once(flags[idx], [&] { cache[idx] = compute_invariants(model); });
  return cache[idx];
}

Dimension local_dimension(SingularityModel model, unsigned k, int i) {
  const auto& table = local_invariants(model).table;
  if (k < table.size()) {
    const auto& dims = table[k].dims;
    auto it = dims.find(i);
    return it == dims.end() ? Dimension::finite(0) : it->second;
  }
  // H^i(wedge^(k+1)) = H^(i+1)(wedge^k) for k >= 2.
  const unsigned top = static_cast<unsigned>(table.size()) - 1;
  return local_dimension(model, top, i + static_cast<int>(k - top));
}

}  // namespace curvehom
