#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Invariants of a finite group: order, commutativity, exponent, the
/// histogram of element orders, and a display name when the group is
/// recognized (cyclic groups, abelian invariant-factor products, and the
/// named nonabelian references).
struct GroupDesc {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 1;
  std::map<std::size_t, std::size_t> order_histogram;
  std::string recognized;  // e.g. "C5", "C2xC4", "Q8", "S3", or "" if unknown
};

/// Compute the full descriptor; throws NotAGroupError when S is no group.
GroupDesc group_desc(const FiniteSemigroup& g);

/// Abelian of exponent dividing 4 or 6, or a Hamiltonian 2-group.
bool is_higman(const FiniteSemigroup& g);

/// Nonabelian 2-group all of whose subgroups are normal (decided by
/// normality of every cyclic subgroup, which suffices).
bool is_hamiltonian_2group(const FiniteSemigroup& g);

enum class Type2Cyclic { C5, C8, C12 };
std::optional<Type2Cyclic> type2_cyclic(const FiniteSemigroup& g);

enum class ExceptionalGroup { S3, D4, Q12, C4sdC4 };
std::optional<ExceptionalGroup> exceptional_group(const FiniteSemigroup& g);

enum class QuadraticClass {
  ElemAbelian2,
  AbelianExp4,
  AbelianExp6,
  C3,
  C4,
  Q8,
  C8,
  Other
};
/// The finest matching class of the quadratic-field table: C3/C4/Q8/C8
/// recognized exactly, otherwise the exponent class.
QuadraticClass quadratic_class(const FiniteSemigroup& g);

std::string to_string(Type2Cyclic t);
std::string to_string(ExceptionalGroup t);
std::string to_string(QuadraticClass t);

// --- builders -------------------------------------------------------------

FiniteSemigroup cyclic_group(std::size_t n);
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);
/// C_m x| C_n where the C_n generator acts as a |-> a^t (t^n = 1 mod m).
FiniteSemigroup semidirect_cyclic(std::size_t m, std::size_t n, long t);

FiniteSemigroup symmetric_group_3();
FiniteSemigroup dihedral_group_4();   // order 8
FiniteSemigroup quaternion_group_8();
FiniteSemigroup q12_group();          // C3 x| C4, C4 acting by inversion
FiniteSemigroup c4_semidirect_c4();   // the nonabelian C4 x| C4, order 16

}  // namespace semihyp
