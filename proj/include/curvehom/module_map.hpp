#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curvehom/polynomial.hpp"

namespace curvehom {

/// Matrix of polynomials R^cols -> R^rows acting on columns. Optional
/// per-basis-element degree labels are carried for bookkeeping.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(RingPtr ring, std::size_t rows, std::size_t cols);

  static ModuleMap from_columns(RingPtr ring, std::size_t rows, const std::vector<FreeElement>& cols);
  static ModuleMap from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                             std::size_t cols);
  /// Row-major nested list of polynomial strings.
  static ModuleMap parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows,
                         std::size_t cols);
  static ModuleMap identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  FreeElement column(std::size_t c) const;
  std::vector<FreeElement> columns() const;
  FreeElement apply(const FreeElement& v) const;
  /// Composite `(*this) o other`.
  ModuleMap compose(const ModuleMap& other) const;
  /// [this | other], same target.
  ModuleMap concat(const ModuleMap& other) const;
  ModuleMap with_ring(RingPtr ring) const;

  bool is_zero() const;
  /// True when every entry lies in the ideal of the ring's relations.
  bool is_zero_in_ring() const;
  bool operator==(const ModuleMap& other) const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// Normal form of `p` modulo the relations of its ring (identity on
/// polynomial rings).
Polynomial reduce_in_ring(const Polynomial& p);
FreeElement reduce_in_ring(const FreeElement& v);

}  // namespace curvehom
