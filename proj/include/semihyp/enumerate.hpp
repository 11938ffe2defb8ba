#pragma once

#include <cstddef>
#include <functional>

#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Visit one representative per isomorphism class of semigroups of the given
/// order, in lexicographic order of the canonical (minimal) Cayley table.
/// Returns the class count. Throws BudgetExceededError for order > 5.
std::size_t enumerate_semigroups(
    std::size_t order,
    const std::function<void(const FiniteSemigroup&)>& visit = nullptr);

}  // namespace semihyp
