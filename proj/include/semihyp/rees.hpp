#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semihyp/algebra.hpp"
#include "semihyp/linalg.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Sandwich matrix over G^theta: n rows by m columns, entries are group
/// element indices or nullopt for theta.
struct SandwichMatrix {
  std::size_t rows = 0;  // n
  std::size_t cols = 0;  // m
  std::vector<std::vector<std::optional<std::size_t>>> entries;
};

/// M(G; m, n; P): the m*n*|G| Rees matrices (a)_{i lambda} plus theta,
/// with A*B = A o P o B. Element (i, lambda, g) gets index
/// (i*n + lambda)*|G| + g; theta is last.
struct ReesMatrixSemigroup {
  FiniteSemigroup structural_group;
  std::size_t m = 0, n = 0;
  SandwichMatrix sandwich;
  FiniteSemigroup semigroup;

  std::size_t element_index(std::size_t i, std::size_t lambda,
                            std::size_t g) const {
    return (i * n + lambda) * structural_group.order() + g;
  }
  std::size_t theta_index() const { return m * n * structural_group.order(); }
};

ReesMatrixSemigroup rees(const FiniteSemigroup& g, std::size_t m,
                         std::size_t n, const SandwichMatrix& p);

/// Built-in small semigroups: the four order-5 Rees matrix
/// semigroups M, Msigma, M1, M2 over the trivial group, and the basic
/// blocks T2, T2hat, T2prime.
const std::map<std::string, FiniteSemigroup>& fixtures();

/// Munn algebra m(R; m, n; P) over a base algebra R: basis (i, lambda, b_k),
/// product A*B = A o P o B. Entries of the sandwich are base elements.
struct MunnAlgebra {
  StructureConstantAlgebra algebra;
  std::size_t m = 0, n = 0;
  std::size_t base_dim = 1;
  std::vector<std::vector<QVec>> sandwich;  // n x m, base coefficients
};

MunnAlgebra munn(const StructureConstantAlgebra& base, std::size_t m,
                 std::size_t n, const std::vector<std::vector<QVec>>& p);

/// Convenience: Munn algebra of QG with a sandwich over G^theta.
MunnAlgebra munn(const FiniteSemigroup& g, const SandwichMatrix& p);

/// Invertibility of the sandwich matrix, decided by exact elimination.
/// Restricted to the trivial structural group (base Q); nontrivial groups
/// throw UnsupportedBaseError. Non-square matrices are not invertible.
bool sandwich_invertible(const SandwichMatrix& p,
                         std::size_t group_order = 1);

/// The explicit isomorphism X -> X o P of a Munn algebra over Q with
/// invertible sandwich onto the full m x m matrix algebra, verified
/// multiplicative on every basis pair and bijective.
struct MunnMatrixIso {
  std::size_t m = 0;
  std::vector<QMatrix> images;  // image of each Munn basis element
  QVec unit_preimage;           // Munn coordinates of the identity matrix
};

MunnMatrixIso munn_to_matrix_iso(const MunnAlgebra& a);

}  // namespace semihyp
