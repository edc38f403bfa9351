#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curvehom/polynomial.hpp"

namespace curvehom {

class ModuleMap;

enum class MonomialOrderKind { GradedReverseLex, Lex };
enum class ModuleOrderKind { PositionOverTerm, TermOverPosition };

/// Total, multiplicative well-order on module monomials m*e_i.
/// Positions compare with the lower basis index as the larger one.
struct MonomialOrder {
  MonomialOrderKind monomials = MonomialOrderKind::GradedReverseLex;
  ModuleOrderKind module = ModuleOrderKind::PositionOverTerm;

  int compare(const Monomial& a, std::size_t pos_a, const Monomial& b, std::size_t pos_b) const;
  int compare(const Monomial& a, const Monomial& b) const;

  static MonomialOrder grevlex_pot() { return {}; }
  static MonomialOrder grevlex_top() {
    return {MonomialOrderKind::GradedReverseLex, ModuleOrderKind::TermOverPosition};
  }
  static MonomialOrder lex_pot() { return {MonomialOrderKind::Lex, ModuleOrderKind::PositionOverTerm}; }
  std::string name() const;
};

/// Vector-space dimension of a quotient module; `std::nullopt` means infinite.
struct Dimension {
  std::optional<std::size_t> value;

  static Dimension infinite() { return {}; }
  static Dimension finite(std::size_t n) { return {n}; }
  bool is_finite() const { return value.has_value(); }
  std::size_t get() const;
  std::string to_string() const { return value ? std::to_string(*value) : "infinite"; }
  bool operator==(const Dimension&) const = default;
};

/// Leading module monomial of a nonzero element under `order`.
struct LeadingTerm {
  Monomial monomial;
  std::size_t position;
  Rational coefficient;
};
LeadingTerm leading_term(const FreeElement& f, const MonomialOrder& order);

/// Remainder of `f` on division by `basis`; zero iff `f` lies in the
/// submodule when `basis` is a Groebner basis. Quotient-ring relations are
/// not added here: pass a basis produced by groebner_basis for that.
FreeElement normal_form(const FreeElement& f, const std::vector<FreeElement>& basis,
                        const MonomialOrder& order = {});

/// Reduced Groebner basis of the submodule generated by `generators`,
/// monic and sorted by ascending leading term. Over a quotient ring the
/// relation multiples rel*e_i are appended before the computation.
std::vector<FreeElement> groebner_basis(const std::vector<FreeElement>& generators,
                                        const MonomialOrder& order = {});

/// Columns generating the kernel of `m` (over the quotient ring when `m`'s
/// ring has relations). The columns form a reduced Groebner basis of the
/// kernel under graded-reverse-lex term-over-position.
ModuleMap syzygies(const ModuleMap& m);

/// Solves `m * a == v` for a coefficient column `a`, or nullopt when `v` is
/// not in the column span.
std::optional<FreeElement> lift(const ModuleMap& m, const FreeElement& v);

/// Number of standard monomials of F/M where M is generated by
/// `generators` inside F = R^rank.
Dimension quotient_dimension(const std::vector<FreeElement>& generators, std::size_t rank,
                             const MonomialOrder& order = {});

/// S-vector of two basis elements with the same leading position.
std::optional<FreeElement> s_vector(const FreeElement& f, const FreeElement& g,
                                    const MonomialOrder& order);

}  // namespace curvehom
