#pragma once

// Sparse module vectors and Buchberger's algorithm. Everything above this
// layer (kernels, subquotients, lifts) reduces to Groebner bases of
// submodules of a free module under a position-over-term order.

#include <cstdint>
#include <vector>

#include "curvehom/groebner.hpp"

namespace curvehom::detail {

struct Term {
  Monomial mono;
  std::uint32_t pos;
  Rational coeff;
};

/// Terms sorted descending under the active order, no zero coefficients.
using Vec = std::vector<Term>;

class TermOrder {
 public:
  explicit TermOrder(MonomialOrder order) : order_(order) {}
  int compare(const Term& a, const Term& b) const {
    return order_.compare(a.mono, a.pos, b.mono, b.pos);
  }
  const MonomialOrder& order() const { return order_; }

 private:
  MonomialOrder order_;
};

Vec to_vec(const FreeElement& f, const TermOrder& order, std::uint32_t offset = 0);
/// Writes the coordinates in [offset, offset + rank) back out.
FreeElement from_vec(const Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset = 0);
void sort_vec(Vec& v, const TermOrder& order);

Vec scaled(const Vec& v, const Monomial& m, const Rational& c);
/// a + c * m * b.
Vec add_scaled(const Vec& a, const Vec& b, const Monomial& m, const Rational& c,
               const TermOrder& order);
void make_monic(Vec& v);

/// Groebner basis bookkeeping: monic elements indexed by leading position.
class Basis {
 public:
  explicit Basis(TermOrder order) : order_(order) {}
  Basis(std::vector<Vec> elements, TermOrder order);

  const std::vector<Vec>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }

  void add(Vec v);
  /// Index of an element whose leading term divides `t`, or -1.
  long find_divisor(const Term& t) const;
  /// Fully reduced remainder.
  Vec reduce(Vec f) const;
  /// Leading-term-only reduction; returns the remainder of the top part.
  Vec top_reduce(Vec f) const;

 private:
  TermOrder order_;
  std::vector<Vec> elements_;
  std::vector<std::vector<std::uint32_t>> by_position_;
};

/// Reduced Groebner basis (monic, sorted ascending by leading term).
std::vector<Vec> buchberger(std::vector<Vec> generators, const TermOrder& order);

}  // namespace curvehom::detail
