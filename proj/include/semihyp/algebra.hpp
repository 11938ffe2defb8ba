#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semihyp/linalg.hpp"
#include "semihyp/rational.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

struct SparseTerm {
  std::size_t k;
  Rational c;
};
using SparseVec = std::vector<SparseTerm>;  // sorted by k, no zero terms

/// Finite dimensional Q-algebra given by structure constants: basis
/// b_0..b_{dim-1} with b_i b_j = sum_k c_ijk b_k. Exact rational
/// coefficients; the constructor re-checks associativity on all basis
/// triples.
class StructureConstantAlgebra {
 public:
  StructureConstantAlgebra(std::vector<std::string> labels,
                           std::vector<std::vector<SparseVec>> products);

  std::size_t dim() const { return dim_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return products_[i][j];
  }

  QVec mul(const QVec& x, const QVec& y) const;
  QVec basis_vector(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> products_;
};

/// Q_0 S: basis S minus theta, products from the Cayley table with theta
/// identified with 0. Requires a zero element.
StructureConstantAlgebra contracted_algebra(const FiniteSemigroup& s);

/// QG for a group G; unital with the identity basis vector as unity.
StructureConstantAlgebra group_algebra(const FiniteSemigroup& g);

/// The unique two-sided unity as a coefficient vector, if one exists
/// (solved exactly as a linear system).
std::optional<QVec> has_unity(const StructureConstantAlgebra& a);

/// A with a unity adjoined as the last basis element.
StructureConstantAlgebra adjoin_unity(const StructureConstantAlgebra& a);

struct RadicalInfo {
  std::size_t dim_j = 0;
  std::vector<QVec> basis;          // reduced echelon form
  std::size_t nilpotency_index = 1; // smallest k with J^k = 0
  bool central = true;
};

/// Jacobson radical via the characteristic-zero trace-form criterion:
/// J = kernel of the Gram matrix T_ij = trace(L_{b_i b_j}) of the left
/// regular representation. Non-unital algebras get a unity adjoined first;
/// the kernel then automatically lies in the original span.
RadicalInfo radical(const StructureConstantAlgebra& a);

struct ActionScalars {
  std::size_t element;
  Rational lambda;  // b_s . j0 = lambda j0
  Rational rho;     // j0 . b_s = rho j0
};

/// Exact scalars of the radical line action. Throws RadicalNotALineError
/// unless rad.dim_j == 1.
ActionScalars action_scalars(const StructureConstantAlgebra& a,
                             const RadicalInfo& rad, std::size_t s);

/// Basis of the center {x : xb = bx for all basis b}.
std::vector<QVec> center(const StructureConstantAlgebra& a);

struct T2BlockResult {
  bool found = false;
  QVec u, v;         // idempotents realizing the T2(Q) table with j0
  std::string note;  // diagnostic when not found
};

/// Search for idempotents u, v with u j0 = j0 = j0 v, j0 u = v j0 = 0,
/// uv = vu = 0, so that span{u, v, j0} multiplies exactly like the upper
/// triangular 2x2 matrices. Candidates come from basis idempotents and
/// their sandwich corrections, then from a bounded scan of the affine
/// solution spaces of the linear constraints. Throws RadicalNotALineError
/// when dim J != 1; returns found=false with a note when the radical is
/// central or the search is exhausted.
T2BlockResult t2_block_check(const StructureConstantAlgebra& a);

// sparse/dense helpers shared by the algebra layer
QVec sparse_to_dense(const SparseVec& v, std::size_t dim);
SparseVec dense_to_sparse(const QVec& v);

}  // namespace semihyp
