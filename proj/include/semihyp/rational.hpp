#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace semihyp {

// Exact rational scalar. GMP keeps mpq values canonical only if they were
// built canonical, so all construction from raw numerator/denominator pairs
// must go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_from_strings(const std::string& num,
                                      const std::string& den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

using QVec = std::vector<Rational>;

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rational(0)); }

inline bool qvec_is_zero(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace semihyp
