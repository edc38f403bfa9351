#pragma once

#include <optional>
#include <vector>

#include "gb_internal.hpp"

namespace curvehom::detail {

struct StandardMonomial {
  Monomial monomial;
  std::size_t position;
};

/// Relation multiples rel * e_i for i < rank, positions shifted by offset.
std::vector<Vec> relation_vectors(const RingPtr& ring, std::size_t rank, std::uint32_t offset,
                                  const TermOrder& order);

std::vector<std::vector<Monomial>> leading_monomials_by_position(const std::vector<Vec>& gb,
                                                                 std::size_t rank,
                                                                 std::uint32_t offset);

/// Monomials m*e_p (p < rank, positions counted from offset) outside the
/// leading-term module of `gb`, ascending; nullopt when there are infinitely many.
std::optional<std::vector<StandardMonomial>> standard_monomials(const std::vector<Vec>& gb,
                                                                std::size_t rank,
                                                                std::size_t nvars,
                                                                const TermOrder& order,
                                                                std::uint32_t offset);

}  // namespace curvehom::detail
