#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curvehom/groebner.hpp"
#include "curvehom/module_map.hpp"

namespace curvehom {

/// Dense matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  bool is_zero() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix&) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {
struct SubquotientData;
}

/// A module given as A^ambient_rank / relations. When built as a
/// subquotient Z/B of a free module C, basis element j stands for the cycle
/// realization().column(j) and elements of C can be expressed in it.
class PresentedModule {
 public:
  /// C / im(relations) where C = R^rank.
  static PresentedModule cokernel(RingPtr ring, std::size_t rank, const ModuleMap& relations, int degree = 0);
  /// span(cycles) / (span(cycles) n im(boundaries)) inside the common target.
  static PresentedModule subquotient(const ModuleMap& cycles, const ModuleMap& boundaries, int degree = 0);

  const RingPtr& ring() const;
  std::size_t ambient_rank() const;
  /// Relation columns, a reduced Groebner basis of the relation module.
  const ModuleMap& relations() const;
  /// Cycle represented by each basis element.
  const ModuleMap& realization() const;
  /// Homological degree tag shared by every basis element.
  int degree() const;
  std::vector<int> grading() const { return std::vector<int>(ambient_rank(), degree()); }

  Dimension dimension() const;
  /// Minimal generators: realization columns that are not already boundaries.
  std::vector<FreeElement> generators() const;
  /// Vector-space basis (as elements of the realization space), one per
  /// standard monomial. Throws UnsupportedError when infinite-dimensional.
  std::vector<FreeElement> basis() const;
  /// Coordinates of the class of `element` in basis(). Throws
  /// PreconditionError when `element` is outside the span of the cycles.
  std::vector<Rational> coordinates(const FreeElement& element) const;
  /// True when `element` lies in the span of the cycles.
  bool contains(const FreeElement& element) const;
  /// True when the class of `element` is zero.
  bool is_zero_class(const FreeElement& element) const;

 private:
  std::shared_ptr<const detail::SubquotientData> data_;
};

/// Bounded cochain complex C^lo -> ... -> C^hi of free modules.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `differentials[k]` maps C^(lo+k) to C^(lo+k+1). Throws
  /// PreconditionError unless consecutive differentials compose to zero.
  ChainComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks, std::vector<ModuleMap> differentials);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int i) const;
  /// d^i: C^i -> C^(i+1); a zero map outside the window.
  ModuleMap differential(int i) const;

  /// Optional names for the basis elements in degree i.
  void set_labels(int i, std::vector<std::string> labels);
  std::vector<std::string> labels(int i) const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<ModuleMap> differentials_;
  std::map<int, std::vector<std::string>> labels_;
};

/// Q-linear map v -> M0 v + sum_t M_t (d v / d x_t) between free modules
/// over a polynomial ring. With no derivative parts it is a module map.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(ModuleMap zeroth);  // NOLINT(google-explicit-constructor)
  /// One derivative part per ring variable (or none).
  LinearOperator(ModuleMap zeroth, std::vector<ModuleMap> derivative_parts);

  const RingPtr& ring() const { return zeroth_.ring(); }
  std::size_t rows() const { return zeroth_.rows(); }
  std::size_t cols() const { return zeroth_.cols(); }
  const ModuleMap& zeroth() const { return zeroth_; }
  const std::vector<ModuleMap>& derivative_parts() const { return derivative_; }
  bool is_module_map() const { return derivative_.empty(); }

  FreeElement apply(const FreeElement& v) const;
  /// (*this) o other; throws UnsupportedError when the result has order two.
  LinearOperator compose(const LinearOperator& other) const;
  /// Equality as operators, comparing entries modulo the ring's relations.
  bool equals(const LinearOperator& other) const;
  bool is_zero() const;

 private:
  ModuleMap zeroth_;
  std::vector<ModuleMap> derivative_;
};

/// Degree-preserving map of complexes; missing components are zero.
class ChainMap {
 public:
  /// Throws PreconditionError unless f d = d f in every degree.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, LinearOperator> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  LinearOperator component(int i) const;
  bool is_module_map() const;
  /// (*this) o other.
  ChainMap compose(const ChainMap& other) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, LinearOperator> components_;
};

/// Generators of { v : a v in im(q) }, both maps sharing a target.
ModuleMap kernel_mod(const ModuleMap& a, const ModuleMap& q);

PresentedModule homology_at(const ChainComplex& c, int i);
Dimension homology_dimension(const ChainComplex& c, int i);
std::vector<FreeElement> homology_generators(const ChainComplex& c, int i);
RationalMatrix induced_map(const ChainMap& f, int i);
/// Dimension of the image of H^i(f); finite whenever the target is, even
/// when the source homology is infinite-dimensional. For operators with
/// derivative parts the image is spanned by f(s z) over monomials s up to a
/// degree bound past the target's dimension.
Dimension induced_rank(const ChainMap& f, int i);
long euler_characteristic(const ChainComplex& c);

}  // namespace curvehom
