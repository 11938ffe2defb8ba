#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semihyp/rational.hpp"

namespace semihyp {

// Dense matrix over Q. Row-major, exact arithmetic throughout; no
// tolerances exist anywhere in this layer.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QVec row(std::size_t r) const;

  QMatrix operator*(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of {x : m x = 0}, each vector of length m.cols(), in the reduced
// echelon convention (free variable set to 1, pivots solved).
std::vector<QVec> nullspace(const QMatrix& m);

// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<QVec> solve(const QMatrix& m, const QVec& rhs);

std::optional<QMatrix> inverse(const QMatrix& m);

Rational determinant(QMatrix m);

// Reduce the spanning set to a basis in reduced echelon form.
std::vector<QVec> row_space_basis(const std::vector<QVec>& vectors,
                                  std::size_t width);

// Is v in the row space of basis (basis need not be echelonized)?
bool in_span(const std::vector<QVec>& basis, const QVec& v);

}  // namespace semihyp
