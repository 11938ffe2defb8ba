#pragma once

#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp::testing {

using Table = std::vector<std::vector<std::size_t>>;

inline FiniteSemigroup from_table(Table t, std::vector<std::string> names = {}) {
  return FiniteSemigroup(std::move(t), std::move(names));
}

inline FiniteSemigroup trivial_semigroup() { return from_table({{0}}); }

// {theta, f} with f*f = theta; theta at index 0
inline FiniteSemigroup null_semigroup_2() {
  return from_table({{0, 0}, {0, 0}}, {"theta", "f"});
}

inline FiniteSemigroup left_zero_2() { return from_table({{0, 0}, {1, 1}}); }

// the monogenic monoid <f | f^4 = f^2> with an identity adjoined:
// elements 1, f, a=f^2, b=f^3; {a,b} is a copy of C2 with identity a.
// Its principal series has a null factor {f} although f is not nilpotent.
inline FiniteSemigroup tail_c2_monoid() {
  return from_table({{0, 1, 2, 3},
                     {1, 2, 3, 2},
                     {2, 3, 2, 3},
                     {3, 2, 3, 2}},
                    {"1", "f", "a", "b"});
}

// all ideals of S by subset enumeration; only sane for small orders
inline std::vector<std::vector<std::size_t>> all_ideals_brute(
    const FiniteSemigroup& s) {
  std::size_t n = s.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    bool ok = true;
    for (std::size_t x : subset)
      for (std::size_t a = 0; a < n && ok; ++a) {
        auto in = [&](std::size_t v) {
          return (mask & (std::size_t{1} << v)) != 0;
        };
        ok = in(s.mul(x, a)) && in(s.mul(a, x));
      }
    if (ok) out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace semihyp::testing
