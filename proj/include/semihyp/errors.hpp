#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semihyp {

// Base class for everything thrown on invalid input or broken preconditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonAssociativeError : public Error {
 public:
  NonAssociativeError(std::size_t a, std::size_t b, std::size_t c)
      : Error("table is not associative: (" + std::to_string(a) + "*" +
              std::to_string(b) + ")*" + std::to_string(c) + " != " +
              std::to_string(a) + "*(" + std::to_string(b) + "*" +
              std::to_string(c) + ")"),
        a(a), b(b), c(c) {}
  std::size_t a, b, c;  // witness triple
};

class OutOfRangeEntryError : public Error {
 public:
  OutOfRangeEntryError(std::size_t row, std::size_t col)
      : Error("table entry at (" + std::to_string(row) + "," +
              std::to_string(col) + ") is out of range"),
        row(row), col(col) {}
  std::size_t row, col;
};

class NoZeroElementError : public Error {
 public:
  NoZeroElementError() : Error("semigroup has no zero element") {}
};

class NotAnIdealError : public Error {
 public:
  NotAnIdealError(std::size_t inside, std::size_t outside_product)
      : Error("subset is not an ideal: product of element " +
              std::to_string(inside) + " escapes to " +
              std::to_string(outside_product)),
        inside(inside), outside_product(outside_product) {}
  std::size_t inside, outside_product;
};

class NotAGroupError : public Error {
 public:
  explicit NotAGroupError(const std::string& why)
      : Error("semigroup is not a group: " + why) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(std::size_t order)
      : Error("enumeration budget exceeded for order " +
              std::to_string(order) + " (maximum is 5)") {}
};

class NonUnitalError : public Error {
 public:
  NonUnitalError()
      : Error("contracted semigroup algebra has no unity "
              "(hint: adjoin an identity to the semigroup first)") {}
};

class RadicalNotALineError : public Error {
 public:
  explicit RadicalNotALineError(std::size_t dim)
      : Error("radical has dimension " + std::to_string(dim) +
              ", expected 1"),
        dim(dim) {}
  std::size_t dim;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError() : Error("sandwich matrix is not invertible") {}
};

class UnsupportedBaseError : public Error {
 public:
  UnsupportedBaseError()
      : Error("sandwich invertibility is only decided over the rationals "
              "(trivial structural group)") {}
};

class InvalidDError : public Error {
 public:
  explicit InvalidDError(long long d)
      : Error("d = " + std::to_string(d) +
              " is not a positive square-free integer") {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Oracle disagreement with a structurally derived verdict. Always a bug,
// never a data condition; callers must not swallow it.
class InternalInconsistencyError : public Error {
 public:
  explicit InternalInconsistencyError(const std::string& msg)
      : Error("internal inconsistency: " + msg) {}
};

}  // namespace semihyp
