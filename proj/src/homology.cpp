#include "curvehom/homology.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "gb_internal.hpp"
#include "standard_monomials.hpp"

namespace curvehom {

// -- RationalMatrix -----------------------------------------------------------

std::size_t RationalMatrix::rank() const {
  std::vector<Rational> m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m[pivot * cols_ + k], m[rank * cols_ + k]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m[r * cols_ + c] == 0) continue;
      const Rational factor = m[r * cols_ + c] / m[rank * cols_ + c];
      for (std::size_t k = c; k < cols_; ++k) m[r * cols_ + k] -= factor * m[rank * cols_ + k];
    }
    ++rank;
  }
  return rank;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product of incompatible shapes");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << rational_to_string(at(r, c));
    out << "]\n";
  }
  return out.str();
}

// -- PresentedModule ----------------------------------------------------------

namespace detail {

// One Groebner basis of {(K_j, e_j)} u {(Q_l, 0)} in F (+) A^m, F first,
// answers every question: the elements without F-part present the module,
// and normal forms of (z, 0) give coordinates of cycles.
struct SubquotientData {
  RingPtr ring;
  std::size_t target_rank = 0;
  std::size_t tags = 0;
  int degree = 0;
  ModuleMap cycles;
  ModuleMap relations;
  TermOrder order{MonomialOrder::grevlex_pot()};
  Basis combined{TermOrder(MonomialOrder::grevlex_pot())};
  Basis boundaries{TermOrder(MonomialOrder::grevlex_pot())};
  std::optional<std::vector<StandardMonomial>> standard;
};

}  // namespace detail

using detail::Term;
using detail::Vec;

PresentedModule PresentedModule::subquotient(const ModuleMap& cycles, const ModuleMap& boundaries, int degree) {
  if (cycles.rows() != boundaries.rows()) throw InputError("cycles and boundaries live in different modules");
  if (!cycles.ring()->same_variables(*boundaries.ring())) throw InputError("cycles and boundaries over different rings");
  auto data = std::make_shared<detail::SubquotientData>();
  data->ring = cycles.ring();
  data->target_rank = cycles.rows();
  data->tags = cycles.cols();
  data->degree = degree;
  data->cycles = cycles;
  const auto& order = data->order;
  const auto r = static_cast<std::uint32_t>(data->target_rank);

  std::vector<Vec> gens;
  for (std::size_t j = 0; j < cycles.cols(); ++j) {
    Vec v = detail::to_vec(cycles.column(j), order);
    v.push_back(Term{Monomial{}, r + static_cast<std::uint32_t>(j), Rational(1)});
    detail::sort_vec(v, order);
    gens.push_back(std::move(v));
  }
  std::vector<Vec> image;
  for (std::size_t l = 0; l < boundaries.cols(); ++l) image.push_back(detail::to_vec(boundaries.column(l), order));
  for (auto& rel : detail::relation_vectors(data->ring, data->target_rank, 0, order)) image.push_back(std::move(rel));
  gens.insert(gens.end(), image.begin(), image.end());

  auto gb = detail::buchberger(std::move(gens), order);
  std::vector<FreeElement> rel_cols;
  for (const auto& g : gb)
    if (g.front().pos >= r) rel_cols.push_back(detail::from_vec(g, data->ring, data->tags, r));
  data->relations = ModuleMap::from_columns(data->ring, data->tags, rel_cols);
  data->standard = detail::standard_monomials(gb, data->tags, data->ring->variable_count(), order, r);
  data->combined = detail::Basis(std::move(gb), order);
  data->boundaries = detail::Basis(detail::buchberger(std::move(image), order), order);

  PresentedModule out;
  out.data_ = std::move(data);
  return out;
}

PresentedModule PresentedModule::cokernel(RingPtr ring, std::size_t rank, const ModuleMap& relations, int degree) {
  if (relations.rows() != rank) throw InputError("relation columns do not live in the declared free module");
  return subquotient(ModuleMap::identity(std::move(ring), rank), relations, degree);
}

const RingPtr& PresentedModule::ring() const { return data_->ring; }
std::size_t PresentedModule::ambient_rank() const { return data_->tags; }
const ModuleMap& PresentedModule::relations() const { return data_->relations; }
const ModuleMap& PresentedModule::realization() const { return data_->cycles; }
int PresentedModule::degree() const { return data_->degree; }

Dimension PresentedModule::dimension() const {
  if (data_->tags == 0) return Dimension::finite(0);
  if (!data_->standard) return Dimension::infinite();
  return Dimension::finite(data_->standard->size());
}

std::vector<FreeElement> PresentedModule::generators() const {
  std::vector<FreeElement> out;
  const auto& d = *data_;
  for (std::size_t j = 0; j < d.tags; ++j) {
    Vec v = d.boundaries.reduce(detail::to_vec(d.cycles.column(j), d.order));
    if (v.empty()) continue;
    out.push_back(detail::from_vec(v, d.ring, d.target_rank));
  }
  return out;
}

std::vector<FreeElement> PresentedModule::basis() const {
  const auto& d = *data_;
  if (d.tags == 0) return {};
  if (!d.standard) throw UnsupportedError("homology is infinite-dimensional; no finite basis");
  std::vector<FreeElement> out;
  for (const auto& s : *d.standard) {
    Vec v = detail::scaled(detail::to_vec(d.cycles.column(s.position), d.order), s.monomial, 1);
    v = d.boundaries.reduce(std::move(v));
    out.push_back(detail::from_vec(v, d.ring, d.target_rank));
  }
  return out;
}

namespace {

// Remainder of (element, 0); nullopt when the F-part does not vanish.
std::optional<Vec> tag_remainder(const detail::SubquotientData& d, const FreeElement& element) {
  if (element.rank() != d.target_rank) throw InputError("element has the wrong rank");
  Vec v = d.combined.reduce(detail::to_vec(element, d.order));
  if (!v.empty() && v.front().pos < d.target_rank) return std::nullopt;
  return v;
}

}  // namespace

bool PresentedModule::contains(const FreeElement& element) const {
  return tag_remainder(*data_, element).has_value();
}

bool PresentedModule::is_zero_class(const FreeElement& element) const {
  auto t = tag_remainder(*data_, element);
  if (!t) throw PreconditionError("element is not in the span of the cycles");
  return t->empty();
}

std::vector<Rational> PresentedModule::coordinates(const FreeElement& element) const {
  const auto& d = *data_;
  auto t = tag_remainder(d, element);
  if (!t) throw PreconditionError("element is not in the span of the cycles");
  if (d.tags == 0) return {};
  if (!d.standard) throw UnsupportedError("homology is infinite-dimensional; no coordinates");
  std::vector<Rational> out(d.standard->size());
  const auto r = static_cast<std::uint32_t>(d.target_rank);
  for (const auto& term : *t) {
    const auto it = std::find_if(d.standard->begin(), d.standard->end(), [&](const detail::StandardMonomial& s) {
      return s.position + r == term.pos && s.monomial == term.mono;
    });
    if (it == d.standard->end()) throw PreconditionError("remainder outside the standard monomials");
    out[static_cast<std::size_t>(it - d.standard->begin())] = -term.coeff;
  }
  return out;
}

// -- ChainComplex -------------------------------------------------------------

namespace {

bool difference_is_zero(const ModuleMap& a, const ModuleMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Polynomial diff = a.at(r, c) - b.at(r, c).with_ring(a.ring());
      if (!reduce_in_ring(diff).is_zero()) return false;
    }
  return true;
}

}  // namespace

ChainComplex::ChainComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks, std::vector<ModuleMap> differentials)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  if (!ring_) throw InputError("complex without a ring");
  if (ranks_.empty()) ranks_.push_back(0);
  if (differentials_.size() + 1 != ranks_.size())
    throw InputError("a complex needs one differential between consecutive terms");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    auto& d = differentials_[k];
    if (d.cols() != ranks_[k] || d.rows() != ranks_[k + 1])
      throw InputError("differential shape does not match the term ranks");
    if (!d.ring()->same_variables(*ring_)) throw InputError("differential over a different ring");
    d = d.with_ring(ring_);
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    if (!differentials_[k + 1].compose(differentials_[k]).is_zero_in_ring())
      throw PreconditionError("differentials do not square to zero in degree " +
                              std::to_string(lo_ + static_cast<int>(k)));
  }
}

std::size_t ChainComplex::rank(int i) const {
  if (i < lo_ || i > hi()) return 0;
  return ranks_[static_cast<std::size_t>(i - lo_)];
}

ModuleMap ChainComplex::differential(int i) const {
  if (i >= lo_ && i < hi()) return differentials_[static_cast<std::size_t>(i - lo_)];
  return ModuleMap(ring_, rank(i + 1), rank(i));
}

void ChainComplex::set_labels(int i, std::vector<std::string> labels) {
  if (labels.size() != rank(i)) throw InputError("label count does not match the rank");
  labels_[i] = std::move(labels);
}

std::vector<std::string> ChainComplex::labels(int i) const {
  auto it = labels_.find(i);
  if (it != labels_.end()) return it->second;
  std::vector<std::string> out;
  for (std::size_t j = 0; j < rank(i); ++j) out.push_back("e" + std::to_string(j));
  return out;
}

// -- LinearOperator -----------------------------------------------------------

namespace {

ModuleMap map_sum(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c).with_ring(a.ring()));
  return out;
}

ModuleMap map_derivative(const ModuleMap& m, std::size_t var) {
  ModuleMap out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c).derivative(var));
  return out;
}

}  // namespace

LinearOperator::LinearOperator(ModuleMap zeroth) : zeroth_(std::move(zeroth)) {}

LinearOperator::LinearOperator(ModuleMap zeroth, std::vector<ModuleMap> derivative_parts)
    : zeroth_(std::move(zeroth)), derivative_(std::move(derivative_parts)) {
  if (derivative_.empty()) return;
  if (zeroth_.ring()->is_quotient()) throw InputError("derivative parts need a polynomial ring");
  if (derivative_.size() != zeroth_.ring()->variable_count())
    throw InputError("one derivative part per variable is required");
  for (auto& m : derivative_) {
    if (m.rows() != zeroth_.rows() || m.cols() != zeroth_.cols())
      throw InputError("derivative part has the wrong shape");
    m = m.with_ring(zeroth_.ring());
  }
  if (std::all_of(derivative_.begin(), derivative_.end(), [](const ModuleMap& m) { return m.is_zero(); }))
    derivative_.clear();
}

FreeElement LinearOperator::apply(const FreeElement& v) const {
  FreeElement out = zeroth_.apply(v);
  for (std::size_t t = 0; t < derivative_.size(); ++t) {
    FreeElement dv = v;
    for (auto& c : dv.coords) c = c.derivative(t);
    out += derivative_[t].apply(dv);
  }
  return out;
}

LinearOperator LinearOperator::compose(const LinearOperator& other) const {
  if (cols() != other.rows()) throw InputError("composition of incompatible operators");
  const auto& p = derivative_;
  const auto& q = other.derivative_;
  if (p.empty() && q.empty()) return LinearOperator(zeroth_.compose(other.zeroth_));
  const std::size_t n = ring()->variable_count();
  if (!p.empty() && !q.empty()) {
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = t; u < n; ++u) {
        ModuleMap second = p[t].compose(q[u]);
        if (u != t) second = map_sum(second, p[u].compose(q[t]));
        if (!second.is_zero()) throw UnsupportedError("composite is a second-order operator");
      }
  }
  ModuleMap zeroth = zeroth_.compose(other.zeroth_);
  for (std::size_t t = 0; t < p.size(); ++t) zeroth = map_sum(zeroth, p[t].compose(map_derivative(other.zeroth_, t)));
  std::vector<ModuleMap> parts;
  for (std::size_t u = 0; u < n; ++u) {
    ModuleMap part(ring(), rows(), other.cols());
    if (!q.empty()) part = map_sum(part, zeroth_.compose(q[u]));
    if (!p.empty()) part = map_sum(part, p[u].compose(other.zeroth_));
    if (!p.empty() && !q.empty())
      for (std::size_t t = 0; t < n; ++t) part = map_sum(part, p[t].compose(map_derivative(q[u], t)));
    parts.push_back(std::move(part));
  }
  return LinearOperator(std::move(zeroth), std::move(parts));
}

bool LinearOperator::equals(const LinearOperator& other) const {
  if (!difference_is_zero(zeroth_, other.zeroth_)) return false;
  const std::size_t n = std::max(derivative_.size(), other.derivative_.size());
  const ModuleMap zero(ring(), rows(), cols());
  for (std::size_t t = 0; t < n; ++t) {
    const ModuleMap& a = derivative_.empty() ? zero : derivative_[t];
    const ModuleMap& b = other.derivative_.empty() ? zero : other.derivative_[t];
    if (!difference_is_zero(a, b)) return false;
  }
  return true;
}

bool LinearOperator::is_zero() const {
  return zeroth_.is_zero_in_ring() && derivative_.empty();
}

// -- ChainMap -----------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, LinearOperator> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_.ring()->same_variables(*target_.ring())) throw InputError("chain map between different rings");
  for (auto& [i, m] : components_) {
    if (m.rows() != target_.rank(i) || m.cols() != source_.rank(i))
      throw InputError("chain map component has the wrong shape in degree " + std::to_string(i));
  }
  const int lo = std::min(source_.lo(), target_.lo()) - 1;
  const int hi = std::max(source_.hi(), target_.hi());
  for (int i = lo; i <= hi; ++i) {
    const LinearOperator lhs = component(i + 1).compose(LinearOperator(source_.differential(i).with_ring(target_.ring())));
    const LinearOperator rhs = LinearOperator(target_.differential(i)).compose(component(i));
    if (!lhs.equals(rhs))
      throw PreconditionError("map does not commute with the differentials in degree " + std::to_string(i));
  }
}

LinearOperator ChainMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return LinearOperator(ModuleMap(target_.ring(), target_.rank(i), source_.rank(i)));
}

bool ChainMap::is_module_map() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& kv) { return kv.second.is_module_map(); });
}

ChainMap ChainMap::compose(const ChainMap& other) const {
  std::map<int, LinearOperator> comps;
  const int lo = std::min(other.source_.lo(), target_.lo());
  const int hi = std::max(other.source_.hi(), target_.hi());
  for (int i = lo; i <= hi; ++i) {
    if (other.target_.rank(i) != source_.rank(i)) throw InputError("composition of incompatible chain maps");
    comps.emplace(i, component(i).compose(other.component(i)));
  }
  return ChainMap(other.source_, target_, std::move(comps));
}

// -- homology -----------------------------------------------------------------

ModuleMap kernel_mod(const ModuleMap& a, const ModuleMap& q) {
  const std::size_t n = a.cols();
  if (n == 0) return ModuleMap(a.ring(), 0, 0);
  const ModuleMap syz = syzygies(a.concat(q.with_ring(a.ring())));
  std::vector<FreeElement> cols;
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    FreeElement col = syz.column(j);
    col.coords.resize(n);
    if (!col.is_zero()) cols.push_back(std::move(col));
  }
  return ModuleMap::from_columns(a.ring(), n, groebner_basis(cols, MonomialOrder::grevlex_top()));
}

namespace {

ModuleMap cycle_generators(const ChainComplex& c, int i) {
  const std::size_t n = c.rank(i);
  if (c.rank(i + 1) == 0 || n == 0) return ModuleMap::identity(c.ring(), n);
  return syzygies(c.differential(i));
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::size_t var, std::vector<unsigned>& cur,
                         std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur[var] = degree;
    out.emplace_back(std::span<const unsigned>(cur.data(), nvars));
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur[var] = e;
    monomials_of_degree(nvars, degree - e, var + 1, cur, out);
  }
}

}  // namespace

PresentedModule homology_at(const ChainComplex& c, int i) {
  return PresentedModule::subquotient(cycle_generators(c, i), c.differential(i - 1), i);
}

Dimension homology_dimension(const ChainComplex& c, int i) { return homology_at(c, i).dimension(); }

std::vector<FreeElement> homology_generators(const ChainComplex& c, int i) { return homology_at(c, i).basis(); }

RationalMatrix induced_map(const ChainMap& f, int i) {
  const PresentedModule hs = homology_at(f.source(), i);
  const PresentedModule ht = homology_at(f.target(), i);
  const auto src_basis = hs.basis();
  const std::size_t rows = ht.dimension().get();
  RationalMatrix out(rows, src_basis.size());
  const LinearOperator comp = f.component(i);
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    const auto coords = ht.coordinates(comp.apply(src_basis[c]));
    for (std::size_t r = 0; r < rows; ++r) out.at(r, c) = coords[r];
  }
  return out;
}

Dimension induced_rank(const ChainMap& f, int i) {
  const ModuleMap cycles = cycle_generators(f.source(), i).with_ring(f.target().ring());
  const LinearOperator comp = f.component(i);
  if (comp.is_module_map())
    return PresentedModule::subquotient(comp.zeroth().compose(cycles), f.target().differential(i - 1), i).dimension();

  const PresentedModule ht = homology_at(f.target(), i);
  const Dimension target_dim = ht.dimension();
  if (!target_dim.is_finite()) return Dimension::infinite();
  const std::size_t nvars = cycles.ring()->variable_count();
  const unsigned bound = static_cast<unsigned>(target_dim.get()) + 3;
  std::vector<std::vector<Rational>> rows;
  std::vector<unsigned> cur(nvars);
  std::size_t rank = 0;
  for (unsigned deg = 0; deg <= bound && rank < target_dim.get(); ++deg) {
    std::vector<Monomial> monos;
    monomials_of_degree(nvars, deg, 0, cur, monos);
    for (const auto& s : monos)
      for (std::size_t j = 0; j < cycles.cols(); ++j) {
        FreeElement v = cycles.column(j);
        for (auto& p : v.coords) p = p.mul_term(s, 1);
        rows.push_back(ht.coordinates(comp.apply(v)));
      }
    RationalMatrix m(rows.size(), target_dim.get());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < target_dim.get(); ++c) m.at(r, c) = rows[r][c];
    rank = m.rank();
  }
  return Dimension::finite(rank);
}


long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const Dimension d = homology_dimension(c, i);
    if (!d.is_finite())
      throw UnsupportedError("homology in degree " + std::to_string(i) + " is infinite-dimensional");
    const long v = static_cast<long>(d.get());
    chi += (i % 2 == 0) ? v : -v;
  }
  return chi;
}

}  // namespace curvehom
