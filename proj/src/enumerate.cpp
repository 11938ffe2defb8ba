#include "semihyp/enumerate.hpp"

#include <vector>

#include "semihyp/isomorphism.hpp"

namespace semihyp {

namespace {

constexpr int kUnset = -1;

// Backtracking fill of the Cayley table in row-major order. A triple
// (x,y,z) is checked the moment its last lookup becomes defined, so dead
// branches are cut as early as possible; isomorphism dedup happens at the
// leaves by keeping lex-minimal tables only.
struct Enumerator {
  std::size_t n;
  std::vector<int> t;  // n*n, kUnset where not filled yet
  const std::function<void(const FiniteSemigroup&)>& visit;
  std::size_t count = 0;

  Enumerator(std::size_t n,
             const std::function<void(const FiniteSemigroup&)>& visit)
      : n(n), t(n * n, kUnset), visit(visit) {}

  int get(int a, int b) const { return t[a * n + b]; }

  // All associativity triples whose last lookup is the cell (a,b).
  bool consistent_after(int a, int b) const {
    int v = get(a, b);
    // (a,b,c): lookups (a,b), (b,c), (ab,c), (a,bc)
    for (int c = 0; c < static_cast<int>(n); ++c) {
      int bc = get(b, c);
      int vc = get(v, c);
      if (bc != kUnset && vc != kUnset) {
        int abc = get(a, bc);
        if (abc != kUnset && abc != vc) return false;
      }
    }
    // (x,a,b): lookups (x,a), (a,b), (xa,b), (x,ab)
    for (int x = 0; x < static_cast<int>(n); ++x) {
      int xa = get(x, a);
      int xv = get(x, v);
      if (xa != kUnset && xv != kUnset) {
        int xab = get(xa, b);
        if (xab != kUnset && xab != xv) return false;
      }
    }
    // (x,y,b) with xy = a: compare (xy)b = v against x(yb)
    // (a,y,z) with yz = b: compare (ay)z against a(yz) = v
    for (int x = 0; x < static_cast<int>(n); ++x)
      for (int y = 0; y < static_cast<int>(n); ++y) {
        int xy = get(x, y);
        if (xy == kUnset) continue;
        if (xy == a) {
          int yb = get(y, b);
          if (yb != kUnset) {
            int xyb = get(x, yb);
            if (xyb != kUnset && xyb != v) return false;
          }
        }
        if (xy == b) {
          // here (x,y) plays (y,z) in the triple (a,x,y)
          int ax = get(a, x);
          if (ax != kUnset) {
            int axy = get(ax, y);
            if (axy != kUnset && axy != v) return false;
          }
        }
      }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == n * n) {
      leaf();
      return;
    }
    int a = static_cast<int>(cell / n), b = static_cast<int>(cell % n);
    for (std::size_t v = 0; v < n; ++v) {
      t[cell] = static_cast<int>(v);
      if (consistent_after(a, b)) fill(cell + 1);
    }
    t[cell] = kUnset;
  }

  void leaf() {
    std::vector<std::vector<std::size_t>> table(n,
                                                std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table[i][j] = static_cast<std::size_t>(get(static_cast<int>(i),
                                                   static_cast<int>(j)));
    FiniteSemigroup s(table);  // re-validates associativity
    if (canonical_table(s) != table) return;  // not the class representative
    ++count;
    if (visit) visit(s);
  }
};

}  // namespace

std::size_t enumerate_semigroups(
    std::size_t order,
    const std::function<void(const FiniteSemigroup&)>& visit) {
  if (order == 0 || order > 5) throw BudgetExceededError(order);
  Enumerator e(order, visit);
  e.fill(0);
  return e.count;
}

}  // namespace semihyp
