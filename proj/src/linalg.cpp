#include "semihyp/linalg.hpp"

#include <cassert>

namespace semihyp {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVec QMatrix::row(std::size_t r) const {
  QVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  assert(cols_ == other.rows_);
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m.at(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        swap(m.at(pivot, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVec> nullspace(const QMatrix& m) {
  QMatrix e = m;
  std::vector<std::size_t> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v = qvec_zero(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -e.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& rhs) {
  assert(rhs.size() == m.rows());
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVec x = qvec_zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rational determinant(QMatrix m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m.at(pivot, c))) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = 1 / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::vector<QVec> row_space_basis(const std::vector<QVec>& vectors,
                                  std::size_t width) {
  QMatrix m(vectors.size(), width);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    assert(vectors[i].size() == width);
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = vectors[i][j];
  }
  std::size_t r = rref(m).size();
  std::vector<QVec> basis;
  basis.reserve(r);
  for (std::size_t i = 0; i < r; ++i) basis.push_back(m.row(i));
  return basis;
}

bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (qvec_is_zero(v)) return true;
  if (basis.empty()) return false;
  // v in span(B) iff rank([B; v]) == rank(B)
  std::size_t width = v.size();
  QMatrix with(basis.size() + 1, width), without(basis.size(), width);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) {
      with.at(i, j) = basis[i][j];
      without.at(i, j) = basis[i][j];
    }
  for (std::size_t j = 0; j < width; ++j)
    with.at(basis.size(), j) = v[j];
  return rank(std::move(with)) == rank(std::move(without));
}

}  // namespace semihyp
