#include "curvehom/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "curvehom/module_map.hpp"
#include "gb_internal.hpp"
#include "standard_monomials.hpp"

namespace curvehom {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  return monomials == MonomialOrderKind::GradedReverseLex ? compare_grevlex(a, b) : compare_lex(a, b);
}

int MonomialOrder::compare(const Monomial& a, std::size_t pos_a, const Monomial& b,
                           std::size_t pos_b) const {
  const int pos_cmp = pos_a == pos_b ? 0 : (pos_a < pos_b ? 1 : -1);
  if (module == ModuleOrderKind::PositionOverTerm) {
    if (pos_cmp != 0) return pos_cmp;
    return compare(a, b);
  }
  const int c = compare(a, b);
  return c != 0 ? c : pos_cmp;
}

std::string MonomialOrder::name() const {
  std::string out = monomials == MonomialOrderKind::GradedReverseLex ? "grevlex" : "lex";
  out += module == ModuleOrderKind::PositionOverTerm ? "/pot" : "/top";
  return out;
}

std::size_t Dimension::get() const {
  if (!value) throw UnsupportedError("dimension is infinite");
  return *value;
}

namespace detail {

void sort_vec(Vec& v, const TermOrder& order) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
}

Vec to_vec(const FreeElement& f, const TermOrder& order, std::uint32_t offset) {
  Vec v;
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    for (const auto& [m, c] : f.coords[i].terms())
      v.push_back(Term{m, static_cast<std::uint32_t>(offset + i), c});
  }
  sort_vec(v, order);
  return v;
}

FreeElement from_vec(const Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Polynomial::Term>> parts(rank);
  for (const auto& t : v) {
    if (t.pos < offset || t.pos >= offset + rank) continue;
    parts[t.pos - offset].emplace_back(t.mono, t.coeff);
  }
  std::vector<Polynomial> coords;
  coords.reserve(rank);
  for (auto& p : parts) coords.emplace_back(ring, std::move(p));
  return FreeElement(std::move(coords));
}

Vec scaled(const Vec& v, const Monomial& m, const Rational& c) {
  Vec out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(Term{t.mono * m, t.pos, t.coeff * c});
  return out;
}

Vec add_scaled(const Vec& a, const Vec& b, const Monomial& m, const Rational& c, const TermOrder& order) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term bt;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) {
      bt.mono = b[j].mono * m;
      bt.pos = b[j].pos;
    }
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = order.compare(a[i], bt);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      bt.coeff = b[j].coeff * c;
      out.push_back(bt);
      ++j;
    } else {
      Rational s = a[i].coeff + b[j].coeff * c;
      if (s != 0) out.push_back(Term{a[i].mono, a[i].pos, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().coeff == 1) return;
  const Rational inv = 1 / v.front().coeff;
  for (auto& t : v) t.coeff *= inv;
}

Basis::Basis(std::vector<Vec> elements, TermOrder order) : order_(order) {
  for (auto& e : elements) add(std::move(e));
}

void Basis::add(Vec v) {
  if (v.empty()) return;
  const auto pos = v.front().pos;
  if (by_position_.size() <= pos) by_position_.resize(pos + 1);
  by_position_[pos].push_back(static_cast<std::uint32_t>(elements_.size()));
  elements_.push_back(std::move(v));
}

long Basis::find_divisor(const Term& t) const {
  if (t.pos >= by_position_.size()) return -1;
  for (auto idx : by_position_[t.pos]) {
    if (elements_[idx].front().mono.divides(t.mono)) return static_cast<long>(idx);
  }
  return -1;
}

Vec Basis::reduce(Vec f) const {
  std::size_t i = 0;
  while (i < f.size()) {
    const long k = find_divisor(f[i]);
    if (k < 0) {
      ++i;
      continue;
    }
    const Vec& g = elements_[static_cast<std::size_t>(k)];
    const Monomial q = f[i].mono / g.front().mono;
    const Rational c = -f[i].coeff / g.front().coeff;
    Vec tail(f.begin() + static_cast<long>(i), f.end());
    Vec merged = add_scaled(tail, g, q, c, order_);
    f.resize(i);
    f.insert(f.end(), std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
  }
  return f;
}

Vec Basis::top_reduce(Vec f) const {
  while (!f.empty()) {
    const long k = find_divisor(f.front());
    if (k < 0) break;
    const Vec& g = elements_[static_cast<std::size_t>(k)];
    f = add_scaled(f, g, f.front().mono / g.front().mono, -f.front().coeff / g.front().coeff, order_);
  }
  return f;
}

namespace {

struct Pair {
  unsigned degree;
  Monomial lcm;
  std::uint32_t pos;
  std::uint32_t i, j;
};

Vec s_vec(const Vec& f, const Vec& g, const Monomial& lcm, const TermOrder& order) {
  Vec a = scaled(f, lcm / f.front().mono, 1 / f.front().coeff);
  return add_scaled(a, g, lcm / g.front().mono, -1 / g.front().coeff, order);
}

}  // namespace

std::vector<Vec> buchberger(std::vector<Vec> generators, const TermOrder& order) {
  std::erase_if(generators, [](const Vec& v) { return v.empty(); });
  std::uint32_t max_pos = 0;
  for (const auto& g : generators)
    for (const auto& t : g) max_pos = std::max(max_pos, t.pos);
  const bool single_position = max_pos == 0;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = order.order().compare(a.lcm, a.pos, b.lcm, b.pos);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::uint32_t, std::uint32_t>> pending;

  Basis basis(order);
  auto add_element = [&](Vec v) {
    make_monic(v);
    const auto n = static_cast<std::uint32_t>(basis.size());
    const Term& lt = v.front();
    for (std::uint32_t k = 0; k < n; ++k) {
      const Term& other = basis.elements()[k].front();
      if (other.pos != lt.pos) continue;
      const Monomial l = Monomial::lcm(other.mono, lt.mono);
      queue.insert(Pair{l.degree(), l, lt.pos, k, n});
      pending.emplace(k, n);
    }
    basis.add(std::move(v));
  };

  for (auto& g : generators) {
    Vec r = basis.reduce(std::move(g));
    if (!r.empty()) add_element(std::move(r));
  }

  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    const auto& elems = basis.elements();

    if (single_position && elems[p.i].front().mono.coprime(elems[p.j].front().mono)) continue;

    // Buchberger's chain criterion.
    bool redundant = false;
    for (std::uint32_t k = 0; k < elems.size() && !redundant; ++k) {
      if (k == p.i || k == p.j) continue;
      const Term& lt = elems[k].front();
      if (lt.pos != p.pos || !lt.mono.divides(p.lcm)) continue;
      const auto ik = std::minmax(p.i, k);
      const auto jk = std::minmax(p.j, k);
      if (!pending.contains({ik.first, ik.second}) && !pending.contains({jk.first, jk.second}))
        redundant = true;
    }
    if (redundant) continue;

    Vec r = basis.reduce(s_vec(elems[p.i], elems[p.j], p.lcm, order));
    if (!r.empty()) add_element(std::move(r));
  }

  // Minimalize, then tail-reduce.
  std::vector<Vec> elems = basis.elements();
  std::sort(elems.begin(), elems.end(),
            [&](const Vec& a, const Vec& b) { return order.compare(a.front(), b.front()) < 0; });
  Basis minimal(order);
  for (auto& e : elems) {
    if (minimal.find_divisor(e.front()) < 0) minimal.add(e);
  }
  std::vector<Vec> out;
  out.reserve(minimal.size());
  for (const auto& g : minimal.elements()) {
    Vec tail(g.begin() + 1, g.end());
    Vec reduced = minimal.reduce(std::move(tail));
    Vec full;
    full.reserve(reduced.size() + 1);
    full.push_back(g.front());
    full.insert(full.end(), reduced.begin(), reduced.end());
    make_monic(full);
    out.push_back(std::move(full));
  }
  return out;
}

std::vector<Vec> relation_vectors(const RingPtr& ring, std::size_t rank, std::uint32_t offset,
                                  const TermOrder& order) {
  std::vector<Vec> out;
  if (!ring || !ring->is_quotient()) return out;
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& rel : ring->relations()) {
      FreeElement e = FreeElement::zero(ring, rank);
      e.coords[i] = rel.with_ring(ring);
      out.push_back(to_vec(e, order, offset));
    }
  }
  return out;
}

// -- standard monomials -----------------------------------------------------

std::vector<std::vector<Monomial>> leading_monomials_by_position(const std::vector<Vec>& gb,
                                                                 std::size_t rank,
                                                                 std::uint32_t offset) {
  std::vector<std::vector<Monomial>> lead(rank);
  for (const auto& g : gb) {
    if (g.empty()) continue;
    const auto pos = g.front().pos;
    if (pos < offset || pos >= offset + rank) continue;
    lead[pos - offset].push_back(g.front().mono);
  }
  return lead;
}

namespace {

void enumerate_box(const std::array<unsigned, kMaxVariables>& bound, std::size_t nvars,
                   std::size_t var, std::array<unsigned, kMaxVariables>& cur,
                   const std::vector<Monomial>& lead, std::vector<Monomial>& out) {
  if (var == nvars) {
    Monomial m(std::span<const unsigned>(cur.data(), nvars));
    for (const auto& l : lead)
      if (l.divides(m)) return;
    out.push_back(m);
    return;
  }
  for (unsigned e = 0; e < bound[var]; ++e) {
    cur[var] = e;
    enumerate_box(bound, nvars, var + 1, cur, lead, out);
  }
  cur[var] = 0;
}

}  // namespace

std::optional<std::vector<StandardMonomial>> standard_monomials(const std::vector<Vec>& gb,
                                                                std::size_t rank,
                                                                std::size_t nvars,
                                                                const TermOrder& order,
                                                                std::uint32_t offset) {
  auto lead = leading_monomials_by_position(gb, rank, offset);
  std::vector<StandardMonomial> out;
  for (std::size_t p = 0; p < rank; ++p) {
    if (std::any_of(lead[p].begin(), lead[p].end(), [](const Monomial& l) { return l.is_one(); })) continue;
    std::array<unsigned, kMaxVariables> bound{};
    for (std::size_t v = 0; v < nvars; ++v) {
      unsigned best = 0;
      for (const auto& l : lead[p]) {
        if (l.degree() == l[v] && l[v] > 0 && (best == 0 || l[v] < best)) best = l[v];
      }
      if (best == 0) return std::nullopt;
      bound[v] = best;
    }
    std::array<unsigned, kMaxVariables> cur{};
    std::vector<Monomial> ms;
    enumerate_box(bound, nvars, 0, cur, lead[p], ms);
    for (auto& m : ms) out.push_back(StandardMonomial{m, p});
  }
  std::sort(out.begin(), out.end(), [&](const StandardMonomial& a, const StandardMonomial& b) {
    return order.order().compare(a.monomial, a.position, b.monomial, b.position) < 0;
  });
  return out;
}

}  // namespace detail

using detail::TermOrder;
using detail::Vec;

LeadingTerm leading_term(const FreeElement& f, const MonomialOrder& order) {
  Vec v = detail::to_vec(f, TermOrder(order));
  if (v.empty()) throw InputError("zero element has no leading term");
  return LeadingTerm{v.front().mono, v.front().pos, v.front().coeff};
}

namespace {

void check_ranks(const std::vector<FreeElement>& elems, std::size_t rank) {
  for (const auto& e : elems)
    if (e.rank() != rank) throw InputError("free-module elements have different ranks");
}

RingPtr common_ring(const std::vector<FreeElement>& elems) {
  RingPtr ring;
  for (const auto& e : elems) {
    for (const auto& c : e.coords) {
      if (!c.ring()) continue;
      if (!ring) ring = c.ring();
      else if (!ring->same_variables(*c.ring())) throw InputError("elements from different rings");
    }
  }
  return ring;
}

}  // namespace

FreeElement normal_form(const FreeElement& f, const std::vector<FreeElement>& basis,
                        const MonomialOrder& order) {
  check_ranks(basis, f.rank());
  if (f.rank() == 0) return f;
  std::vector<FreeElement> all = basis;
  all.push_back(f);
  RingPtr ring = common_ring(all);
  const TermOrder to(order);
  detail::Basis b(to);
  for (const auto& g : basis) b.add(detail::to_vec(g, to));
  return detail::from_vec(b.reduce(detail::to_vec(f, to)), f.ring() ? f.ring() : ring, f.rank());
}

std::vector<FreeElement> groebner_basis(const std::vector<FreeElement>& generators,
                                        const MonomialOrder& order) {
  if (generators.empty()) return {};
  const std::size_t rank = generators.front().rank();
  check_ranks(generators, rank);
  RingPtr ring = common_ring(generators);
  if (!ring) return {};
  const TermOrder to(order);
  std::vector<Vec> vecs;
  for (const auto& g : generators) vecs.push_back(detail::to_vec(g, to));
  for (auto& r : detail::relation_vectors(ring, rank, 0, to)) vecs.push_back(std::move(r));
  std::vector<FreeElement> out;
  for (const auto& v : detail::buchberger(std::move(vecs), to)) out.push_back(detail::from_vec(v, ring, rank));
  return out;
}

std::optional<FreeElement> s_vector(const FreeElement& f, const FreeElement& g, const MonomialOrder& order) {
  const TermOrder to(order);
  Vec a = detail::to_vec(f, to), b = detail::to_vec(g, to);
  if (a.empty() || b.empty() || a.front().pos != b.front().pos) return std::nullopt;
  const Monomial l = Monomial::lcm(a.front().mono, b.front().mono);
  Vec s = detail::add_scaled(detail::scaled(a, l / a.front().mono, 1 / a.front().coeff), b,
                             l / b.front().mono, -1 / b.front().coeff, to);
  return detail::from_vec(s, f.ring(), f.rank());
}

namespace {

// GB of {(c_j, e_j)} u {(rel e_r, 0)} in R^rows (+) R^cols, target first.
std::vector<Vec> extended_basis(const ModuleMap& m, const TermOrder& order) {
  std::vector<Vec> gens;
  const auto rows = static_cast<std::uint32_t>(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vec v = detail::to_vec(m.column(j), order);
    v.push_back(detail::Term{Monomial{}, rows + static_cast<std::uint32_t>(j), Rational(1)});
    detail::sort_vec(v, order);
    gens.push_back(std::move(v));
  }
  for (auto& r : detail::relation_vectors(m.ring(), m.rows(), 0, order)) gens.push_back(std::move(r));
  return detail::buchberger(std::move(gens), order);
}

}  // namespace

ModuleMap syzygies(const ModuleMap& m) {
  const RingPtr& ring = m.ring();
  const std::size_t n = m.cols();
  if (n == 0) return ModuleMap(ring, 0, 0);
  const TermOrder pot(MonomialOrder::grevlex_pot());
  const auto rows = static_cast<std::uint32_t>(m.rows());
  std::vector<Vec> kernel;
  for (const auto& g : extended_basis(m, pot)) {
    if (g.front().pos < rows) continue;
    Vec shifted = g;
    for (auto& t : shifted) t.pos -= rows;
    kernel.push_back(std::move(shifted));
  }
  const TermOrder top(MonomialOrder::grevlex_top());
  for (auto& k : kernel) detail::sort_vec(k, top);
  std::vector<FreeElement> cols;
  for (const auto& k : detail::buchberger(std::move(kernel), top)) cols.push_back(detail::from_vec(k, ring, n));
  return ModuleMap::from_columns(ring, n, cols);
}

std::optional<FreeElement> lift(const ModuleMap& m, const FreeElement& v) {
  if (v.rank() != m.rows()) throw InputError("lift target has the wrong rank");
  const TermOrder pot(MonomialOrder::grevlex_pot());
  detail::Basis basis(extended_basis(m, pot), pot);
  Vec r = basis.reduce(detail::to_vec(v, pot));
  const auto rows = static_cast<std::uint32_t>(m.rows());
  if (!r.empty() && r.front().pos < rows) return std::nullopt;
  for (auto& t : r) t.coeff = -t.coeff;
  return detail::from_vec(r, m.ring(), m.cols(), rows);
}

Dimension quotient_dimension(const std::vector<FreeElement>& generators, std::size_t rank,
                             const MonomialOrder& order) {
  check_ranks(generators, rank);
  RingPtr ring = common_ring(generators);
  if (!ring) {
    if (rank == 0) return Dimension::finite(0);
    return Dimension::infinite();
  }
  const TermOrder to(order);
  std::vector<Vec> vecs;
  for (const auto& g : generators) vecs.push_back(detail::to_vec(g, to));
  for (auto& r : detail::relation_vectors(ring, rank, 0, to)) vecs.push_back(std::move(r));
  auto gb = detail::buchberger(std::move(vecs), to);
  auto std_monos = detail::standard_monomials(gb, rank, ring->variable_count(), to, 0);
  if (!std_monos) return Dimension::infinite();
  return Dimension::finite(std_monos->size());
}

}  // namespace curvehom
