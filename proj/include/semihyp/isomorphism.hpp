#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp {

/// A product-preserving bijection S1 -> S2 (as an index map), or nullopt.
/// Backtracks over images of a generating set, pruned by per-element
/// invariant fingerprints; derived elements have forced images.
std::optional<std::vector<std::size_t>> isomorphic(const FiniteSemigroup& s1,
                                                   const FiniteSemigroup& s2);

/// Lexicographically minimal Cayley table over all relabelings. Two
/// semigroups are isomorphic iff their canonical tables agree; used for
/// enumeration dedup (practical for order <= 5 only).
std::vector<std::vector<std::size_t>> canonical_table(
    const FiniteSemigroup& s);

/// Relabel S by bijection perm (element i becomes perm[i]).
FiniteSemigroup relabel(const FiniteSemigroup& s,
                        const std::vector<std::size_t>& perm);

}  // namespace semihyp
