#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semihyp/groups.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

enum class FactorTag { Null, Group, GroupWithZero, ReesMatrix };

std::string to_string(FactorTag t);

/// Classification of one Rees factor of a principal series. The witness is
/// the factor itself (a semigroup with zero); group payloads are filled for
/// the Group/GroupWithZero tags.
struct FactorKind {
  FactorTag tag;
  FiniteSemigroup witness;
  std::optional<GroupDesc> group;
};

/// A maximal chain of two-sided ideals of S^theta down to {theta} and the
/// empty set. factors[i] classifies ideals[i] / ideals[i+1]; the terminal
/// pair {theta} > {} carries no factor, so factors.size() ==
/// ideals.size() - 2. The non-theta parts of the factors partition S.
struct PrincipalSeries {
  FiniteSemigroup ambient;  // S, or S with a zero adjoined when it had none
  bool zero_adjoined;
  std::vector<std::vector<std::size_t>> ideals;  // descending, sorted sets
  std::vector<FactorKind> factors;
};

/// Deterministic principal series: descend by removing, at each step, a
/// maximal J-class; among the candidate ideals the one with the
/// lexicographically smallest sorted element sequence wins.
PrincipalSeries principal_series(const FiniteSemigroup& s);

/// Rees quotient S/I on (S \ I) u {theta}, theta placed last. I must be a
/// two-sided ideal (checked); I = {} yields S with a fresh zero adjoined.
FiniteSemigroup rees_quotient(const FiniteSemigroup& s,
                              const std::vector<std::size_t>& ideal);

/// Classify a Rees factor (a semigroup with zero, order >= 2): Null, a
/// group with zero adjoined, or a Rees-matrix (completely 0-simple) factor.
/// whole_group_top marks the top factor of a semigroup that is a group,
/// which is tagged Group instead of GroupWithZero.
FactorKind factor_classify(const FiniteSemigroup& f,
                           bool whole_group_top = false);

bool is_ideal(const FiniteSemigroup& s,
              const std::vector<std::size_t>& subset);

/// The principal two-sided ideal S^1 x S^1, sorted.
std::vector<std::size_t> principal_ideal(const FiniteSemigroup& s,
                                         std::size_t x);

/// J-classes (equal principal ideals), each sorted, in order of smallest
/// member.
std::vector<std::vector<std::size_t>> j_classes(const FiniteSemigroup& s);

}  // namespace semihyp
