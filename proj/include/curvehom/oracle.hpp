#pragma once

#include <cstddef>

#include "curvehom/homology.hpp"

namespace curvehom {

/// Truncated count of dim H^i over a polynomial ring: cycles of polynomial
/// degree <= D modulo boundaries of sources with degree <= D + slack, by
/// exact sparse elimination over Q on coefficient vectors. Shares no code
/// with the Groebner pipeline.
struct OracleCount {
  unsigned degree = 0;
  std::size_t dim = 0;
  /// Same count at degree - 1; differs from dim when H^i keeps growing.
  std::size_t dim_below = 0;

  bool grows() const { return dim != dim_below; }
  /// Finite dimensions must match and be stable, infinite ones must grow.
  bool agrees_with(const Dimension& d) const;
};

/// CURVEHOM_ORACLE_DEGREE, default 8.
unsigned oracle_degree();

OracleCount oracle_homology(const ChainComplex& c, int i, unsigned degree, unsigned slack = 4);

}  // namespace curvehom
