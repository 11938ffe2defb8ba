#include "semihyp/algebra.hpp"

#include <algorithm>

namespace semihyp {

QVec sparse_to_dense(const SparseVec& v, std::size_t dim) {
  QVec out = qvec_zero(dim);
  for (const auto& t : v) out[t.k] = t.c;
  return out;
}

SparseVec dense_to_sparse(const QVec& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out.push_back({k, v[k]});
  return out;
}

StructureConstantAlgebra::StructureConstantAlgebra(
    std::vector<std::string> labels,
    std::vector<std::vector<SparseVec>> products)
    : dim_(products.size()),
      labels_(std::move(labels)),
      products_(std::move(products)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i)
      labels_.push_back("b" + std::to_string(i));
  if (labels_.size() != dim_) throw Error("algebra label list has wrong length");
  for (const auto& row : products_)
    if (row.size() != dim_) throw Error("algebra product table not square");

  // associativity on all basis triples
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      QVec ij = sparse_to_dense(products_[i][j], dim_);
      for (std::size_t k = 0; k < dim_; ++k) {
        QVec left = qvec_zero(dim_);
        for (const auto& t : products_[i][j])
          for (const auto& u : products_[t.k][k]) left[u.k] += t.c * u.c;
        QVec right = qvec_zero(dim_);
        for (const auto& t : products_[j][k])
          for (const auto& u : products_[i][t.k]) right[u.k] += t.c * u.c;
        if (left != right)
          throw Error("structure constants are not associative at triple (" +
                      std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")");
      }
    }
}

QVec StructureConstantAlgebra::mul(const QVec& x, const QVec& y) const {
  QVec out = qvec_zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      Rational f = x[i] * y[j];
      for (const auto& t : products_[i][j]) out[t.k] += f * t.c;
    }
  }
  return out;
}

QVec StructureConstantAlgebra::basis_vector(std::size_t i) const {
  QVec v = qvec_zero(dim_);
  v[i] = 1;
  return v;
}

StructureConstantAlgebra contracted_algebra(const FiniteSemigroup& s) {
  if (!s.has_zero()) throw NoZeroElementError();
  std::size_t theta = *s.zero();
  std::vector<std::size_t> basis;  // semigroup elements, theta dropped
  for (std::size_t x = 0; x < s.order(); ++x)
    if (x != theta) basis.push_back(x);
  std::vector<std::size_t> pos(s.order(), s.order());
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;

  std::size_t d = basis.size();
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t p = s.mul(basis[i], basis[j]);
      if (p != theta) products[i][j] = {{pos[p], Rational(1)}};
    }
  std::vector<std::string> labels;
  for (std::size_t x : basis) labels.push_back(s.name(x));
  return StructureConstantAlgebra(std::move(labels), std::move(products));
}

StructureConstantAlgebra group_algebra(const FiniteSemigroup& g) {
  if (!is_group(g)) throw NotAGroupError("group algebra needs a group");
  std::size_t d = g.order();
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      products[i][j] = {{g.mul(i, j), Rational(1)}};
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < d; ++x) labels.push_back(g.name(x));
  return StructureConstantAlgebra(std::move(labels), std::move(products));
}

std::optional<QVec> has_unity(const StructureConstantAlgebra& a) {
  std::size_t d = a.dim();
  // unknowns x_t; equations u b_i = b_i and b_i u = b_i, coordinatewise
  QMatrix m(2 * d * d, d);
  QVec rhs = qvec_zero(2 * d * d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& term : a.product(t, i))
        m.at(i * d + term.k, t) += term.c;
      for (const auto& term : a.product(i, t))
        m.at(d * d + i * d + term.k, t) += term.c;
    }
  for (std::size_t i = 0; i < d; ++i) {
    rhs[i * d + i] = 1;
    rhs[d * d + i * d + i] = 1;
  }
  return solve(m, rhs);  // a unity is unique when it exists
}

StructureConstantAlgebra adjoin_unity(const StructureConstantAlgebra& a) {
  std::size_t d = a.dim();
  std::vector<std::vector<SparseVec>> products(d + 1,
                                               std::vector<SparseVec>(d + 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i][j] = a.product(i, j);
  for (std::size_t i = 0; i <= d; ++i) {
    products[i][d] = {{i, Rational(1)}};
    products[d][i] = {{i, Rational(1)}};
  }
  std::vector<std::string> labels = a.labels();
  labels.push_back("1");
  return StructureConstantAlgebra(std::move(labels), std::move(products));
}

namespace {

// trace of left multiplication by each basis element
QVec regular_traces(const StructureConstantAlgebra& a) {
  QVec tr = qvec_zero(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (const auto& t : a.product(k, i))
        if (t.k == i) tr[k] += t.c;
  return tr;
}

}  // namespace

RadicalInfo radical(const StructureConstantAlgebra& a) {
  bool unital = has_unity(a).has_value();
  const StructureConstantAlgebra work = unital ? a : adjoin_unity(a);

  QVec tr = regular_traces(work);
  std::size_t d = work.dim();
  QMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : work.product(i, j))
        gram.at(i, j) += t.c * tr[t.k];

  std::vector<QVec> kernel = nullspace(gram);
  if (!unital) {
    // J(A with unity adjoined) = J(A), so the adjoined coordinate vanishes
    for (auto& v : kernel) {
      if (!is_zero(v.back()))
        throw InternalInconsistencyError(
            "radical of unitalization leaves the original span");
      v.pop_back();
    }
  }

  RadicalInfo info;
  info.basis = row_space_basis(kernel, a.dim());
  info.dim_j = info.basis.size();

  // two-sided ideal sanity: b v and v b stay inside span(J)
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : info.basis) {
      if (!in_span(info.basis, a.mul(a.basis_vector(i), v)) ||
          !in_span(info.basis, a.mul(v, a.basis_vector(i))))
        throw InternalInconsistencyError("radical is not a two-sided ideal");
    }

  // nilpotency index: iterate J^{k+1} = J * J^k until it vanishes
  info.nilpotency_index = 1;
  std::vector<QVec> power = info.basis;
  while (!power.empty()) {
    ++info.nilpotency_index;
    std::vector<QVec> next;
    for (const auto& v : info.basis)
      for (const auto& w : power) {
        QVec p = a.mul(v, w);
        if (!qvec_is_zero(p)) next.push_back(std::move(p));
      }
    power = row_space_basis(next, a.dim());
    if (info.nilpotency_index > a.dim() + 1)
      throw InternalInconsistencyError("radical fails to be nilpotent");
  }

  info.central = true;
  for (std::size_t i = 0; i < a.dim() && info.central; ++i)
    for (const auto& v : info.basis)
      if (a.mul(a.basis_vector(i), v) != a.mul(v, a.basis_vector(i))) {
        info.central = false;
        break;
      }
  return info;
}

ActionScalars action_scalars(const StructureConstantAlgebra& a,
                             const RadicalInfo& rad, std::size_t s) {
  if (rad.dim_j != 1) throw RadicalNotALineError(rad.dim_j);
  const QVec& j0 = rad.basis[0];
  std::size_t pivot = 0;
  while (is_zero(j0[pivot])) ++pivot;

  auto scalar_of = [&](const QVec& w) {
    Rational lam = w[pivot] / j0[pivot];
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] != lam * j0[k])
        throw InternalInconsistencyError(
            "radical line is not stable under multiplication");
    return lam;
  };
  QVec bs = a.basis_vector(s);
  return {s, scalar_of(a.mul(bs, j0)), scalar_of(a.mul(j0, bs))};
}

std::vector<QVec> center(const StructureConstantAlgebra& a) {
  std::size_t d = a.dim();
  // for each i,k:  sum_t x_t (c_{t i k} - c_{i t k}) = 0
  QMatrix m(d * d, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& term : a.product(t, i))
        m.at(i * d + term.k, t) += term.c;
      for (const auto& term : a.product(i, t))
        m.at(i * d + term.k, t) -= term.c;
    }
  return nullspace(m);
}

namespace {

bool is_idempotent_vec(const StructureConstantAlgebra& a, const QVec& u) {
  return !qvec_is_zero(u) && a.mul(u, u) == u;
}

// affine solution set of  x j0 = left * j0  and  j0 x = right * j0
struct AffineSpace {
  std::optional<QVec> point;
  std::vector<QVec> directions;
};

AffineSpace action_constraints(const StructureConstantAlgebra& a,
                               const QVec& j0, int left, int right) {
  std::size_t d = a.dim();
  QMatrix m(2 * d, d);
  QVec rhs = qvec_zero(2 * d);
  for (std::size_t t = 0; t < d; ++t) {
    QVec bj = a.mul(a.basis_vector(t), j0);
    QVec jb = a.mul(j0, a.basis_vector(t));
    for (std::size_t k = 0; k < d; ++k) {
      m.at(k, t) = bj[k];
      m.at(d + k, t) = jb[k];
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    rhs[k] = Rational(left) * j0[k];
    rhs[d + k] = Rational(right) * j0[k];
  }
  AffineSpace space;
  space.point = solve(m, rhs);
  if (space.point) space.directions = nullspace(m);
  return space;
}

// idempotents found on an affine space by a bounded coefficient scan
std::vector<QVec> idempotents_on(const StructureConstantAlgebra& a,
                                 const AffineSpace& space) {
  std::vector<QVec> found;
  if (!space.point) return found;
  std::size_t p = std::min<std::size_t>(space.directions.size(), 4);
  std::vector<long> coeff(p, -1);
  for (;;) {
    QVec cand = *space.point;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < cand.size(); ++k)
        cand[k] += Rational(coeff[i]) * space.directions[i][k];
    if (is_idempotent_vec(a, cand)) found.push_back(cand);
    std::size_t i = 0;
    while (i < p && coeff[i] == 1) coeff[i++] = -1;
    if (i == p) break;
    ++coeff[i];
  }
  return found;
}

}  // namespace

T2BlockResult t2_block_check(const StructureConstantAlgebra& a) {
  RadicalInfo rad = radical(a);
  if (rad.dim_j != 1) throw RadicalNotALineError(rad.dim_j);
  if (rad.central) return {false, {}, {}, "radical is central"};
  const QVec& j0 = rad.basis[0];

  auto table_ok = [&](const QVec& u, const QVec& v) {
    return is_idempotent_vec(a, u) && is_idempotent_vec(a, v) &&
           qvec_is_zero(a.mul(u, v)) && qvec_is_zero(a.mul(v, u)) &&
           a.mul(u, j0) == j0 && qvec_is_zero(a.mul(j0, u)) &&
           a.mul(j0, v) == j0 && qvec_is_zero(a.mul(v, j0)) &&
           qvec_is_zero(a.mul(j0, j0));
  };

  // stage 1: basis idempotents with the right action scalars, together
  // with their mutual-product corrections e - ef, e - fe
  std::vector<QVec> left_seed, right_seed;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    QVec e = a.basis_vector(i);
    if (!is_idempotent_vec(a, e)) continue;
    if (a.mul(e, j0) == j0 && qvec_is_zero(a.mul(j0, e)))
      left_seed.push_back(e);
    if (a.mul(j0, e) == j0 && qvec_is_zero(a.mul(e, j0)))
      right_seed.push_back(e);
  }
  auto minus = [](QVec x, const QVec& y) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
    return x;
  };
  for (const QVec& e : left_seed)
    for (const QVec& f : right_seed) {
      std::vector<QVec> us = {e, minus(e, a.mul(e, f)), minus(e, a.mul(f, e))};
      std::vector<QVec> vs = {f, minus(f, a.mul(e, f)), minus(f, a.mul(f, e))};
      for (const QVec& u : us)
        for (const QVec& v : vs)
          if (table_ok(u, v)) return {true, u, v, ""};
    }

  // stage 2: bounded scan over the affine spaces cut out by the action
  // constraints, orthogonality imposed pairwise
  AffineSpace vu = action_constraints(a, j0, 1, 0);
  AffineSpace vv = action_constraints(a, j0, 0, 1);
  for (const QVec& u : idempotents_on(a, vu))
    for (const QVec& v : idempotents_on(a, vv))
      if (table_ok(u, v)) return {true, u, v, ""};

  return {false, {}, {}, "no idempotent pair found by the bounded search"};
}

}  // namespace semihyp
