#include "curvehom/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace curvehom {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVariables) throw InputError("monomial has too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > std::numeric_limits<std::uint16_t>::max())
      throw InputError("exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(exps[i]);
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw InputError("variable index out of range");
  Monomial m;
  m.exps_[index] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw PreconditionError("monomial division is not exact");
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------------------
// Ring

struct Ring::Private {
  explicit Private() = default;
};

Ring::Ring(Private, std::vector<std::string> variables, RingPtr ambient,
           std::vector<Polynomial> relations)
    : variables_(std::move(variables)),
      ambient_(std::move(ambient)),
      relations_(std::make_shared<const std::vector<Polynomial>>(std::move(relations))) {}

RingPtr Ring::polynomial(std::vector<std::string> variables) {
  if (variables.empty() || variables.size() > kMaxVariables)
    throw InputError("rings need between 1 and " + std::to_string(kMaxVariables) + " variables");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[i] == variables[j]) throw InputError("duplicate variable " + variables[i]);
  }
  return std::make_shared<const Ring>(Private{}, std::move(variables), nullptr,
                                      std::vector<Polynomial>{});
}

RingPtr Ring::quotient(const RingPtr& ambient, std::vector<Polynomial> relations) {
  RingPtr base = ambient->ambient();
  for (auto& r : relations) {
    if (!r.ring() || !r.ring()->same_variables(*base))
      throw InputError("relation lives in a different ring");
    r = r.with_ring(base);
  }
  std::erase_if(relations, [](const Polynomial& p) { return p.is_zero(); });
  if (relations.empty()) return base;
  return std::make_shared<const Ring>(Private{}, base->variables(), base, std::move(relations));
}

const std::vector<Polynomial>& Ring::relations() const { return *relations_; }

RingPtr Ring::ambient() const { return ambient_ ? ambient_ : shared_from_this(); }

std::string Ring::describe() const {
  std::string out = "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ',';
    out += variables_[i];
  }
  out += ']';
  if (!relations_->empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_->size(); ++i) {
      if (i) out += ", ";
      out += (*relations_)[i].to_string();
    }
    out += ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return compare_grevlex(a.first, b.first) > 0;
}

// a + sign * b, both sorted descending.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare_grevlex(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  if (!ring_) throw InputError("polynomial without a ring");
  const std::size_t n = ring_->variable_count();
  for (auto& [m, c] : terms) {
    for (std::size_t i = n; i < kMaxVariables; ++i)
      if (m[i] != 0) throw InputError("monomial uses a variable outside the ring");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return Polynomial(std::move(ring), {{Monomial{}, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->variable_count()) throw InputError("variable index out of range");
  return Polynomial(std::move(ring), {{Monomial::variable(index), Rational(1)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto& vars = ring->variables();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InputError("unknown variable " + std::string(name));
  return variable(std::move(ring), static_cast<std::size_t>(it - vars.begin()));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  return Polynomial(std::move(ring), {{m, c}});
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_) throw InputError("polynomial without a ring");
  if (ring_ != other.ring_ && !ring_->same_variables(*other.ring_))
    throw InputError("polynomials from different rings: " + ring_->describe() + " vs " +
                     other.ring_->describe());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [m, c] : b.terms_) r += a.mul_term(m, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    out.emplace_back(m / Monomial::variable(var), c * m[var]);
  }
  return Polynomial(ring_, std::move(out));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& [tm, c] : terms_)
    if (tm == m) return c;
  return 0;
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
  if (!ring_ || !ring->same_variables(*ring_)) throw InputError("ring change needs identical variables");
  Polynomial r = *this;
  r.ring_ = std::move(ring);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variables();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + '*';
      out += monomial_to_string(m, names);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FreeElement

FreeElement FreeElement::zero(const RingPtr& ring, std::size_t rank) {
  return FreeElement(std::vector<Polynomial>(rank, Polynomial(ring)));
}

FreeElement FreeElement::basis(const RingPtr& ring, std::size_t rank, std::size_t index) {
  FreeElement e = zero(ring, rank);
  e.coords.at(index) = Polynomial::constant(ring, 1);
  return e;
}

const RingPtr& FreeElement::ring() const {
  if (coords.empty()) throw InputError("rank-zero free element has no ring");
  return coords.front().ring();
}

bool FreeElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int FreeElement::degree() const {
  int d = -1;
  for (const auto& p : coords) d = std::max(d, p.degree());
  return d;
}

std::string FreeElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("rank mismatch in free-module addition");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("rank mismatch in free-module subtraction");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

FreeElement operator*(const Polynomial& p, const FreeElement& v) {
  FreeElement r = v;
  for (auto& c : r.coords) c = p * c;
  return r;
}

FreeElement operator*(const Rational& c, const FreeElement& v) {
  FreeElement r = v;
  for (auto& x : r.coords) x *= c;
  return r;
}

}  // namespace curvehom
