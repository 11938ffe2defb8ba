#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semihyp/errors.hpp"

namespace semihyp {

/// A finite semigroup given by its full Cayley table. Immutable after
/// construction; the constructor enforces closure and associativity and
/// auto-detects an absorbing zero element.
///
/// Zero detection is restricted to order >= 2: the one-element semigroup is
/// treated as the trivial group, not as a zero semigroup, so that its
/// contracted algebra is Q rather than the zero algebra.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::vector<std::size_t>> table,
                  std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a][b];
  }
  const std::vector<std::vector<std::size_t>>& table() const {
    return table_;
  }
  std::optional<std::size_t> zero() const { return zero_; }
  bool has_zero() const { return zero_.has_value(); }

  const std::vector<std::string>& names() const { return names_; }
  bool has_names() const { return !names_.empty(); }
  std::string name(std::size_t i) const;

  /// Power with positive exponent.
  std::size_t pow(std::size_t a, std::size_t k) const;

 private:
  std::size_t order_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::optional<std::size_t> zero_;
};

/// Checked construction from a raw grid; throws OutOfRangeEntryError or
/// NonAssociativeError with a witness.
FiniteSemigroup validate(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> names = {});

/// E(S), sorted; includes the zero if present.
std::vector<std::size_t> idempotents(const FiniteSemigroup& s);

/// All x != theta with x^m = theta for some m; requires a zero.
std::vector<std::size_t> nilpotents(const FiniteSemigroup& s);

bool is_idempotent(const FiniteSemigroup& s, std::size_t x);
bool is_nilpotent(const FiniteSemigroup& s, std::size_t x);

/// Adjoin a fresh zero (always adds an element, even if S has one).
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);
/// Adjoin a fresh identity (always adds an element).
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);
/// No-op variants: return S itself when it already has a zero/identity.
FiniteSemigroup ensure_zero(const FiniteSemigroup& s);
FiniteSemigroup ensure_identity(const FiniteSemigroup& s);

/// Two-sided identity element, if any.
std::optional<std::size_t> identity_element(const FiniteSemigroup& s);

/// Is S a group (identity exists and every element is invertible)?
bool is_group(const FiniteSemigroup& s);

struct MaximalSubgroup {
  std::size_t idempotent;             // identity of the subgroup, in S
  std::vector<std::size_t> elements;  // subgroup elements, sorted, in S
  FiniteSemigroup group;              // the subgroup on relabeled indices
};

/// For each non-zero idempotent e, the group of units of the local monoid
/// eSe. Element i of `group` is `elements[i]` in S.
std::vector<MaximalSubgroup> maximal_subgroups(const FiniteSemigroup& s);

/// True iff every non-zero element has exactly one inverse b with
/// aba = a and bab = b.
bool is_inverse(const FiniteSemigroup& s);

/// Restriction of S to a subset closed under multiplication (caller's
/// responsibility), relabeled 0..k-1 in the order given.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             const std::vector<std::size_t>& elements);

/// Ordinal sum: same-level products stay in the level, cross products
/// yield the lower operand. levels[0] is on top; each level together with
/// everything below it is an ideal. With group levels this is the strong
/// semilattice chain with trivial linking maps.
FiniteSemigroup chain_semigroups(const std::vector<FiniteSemigroup>& levels);

}  // namespace semihyp
