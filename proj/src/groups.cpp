#include "semihyp/groups.hpp"

#include <algorithm>
#include <numeric>

#include "semihyp/isomorphism.hpp"

namespace semihyp {

namespace {

std::size_t require_identity(const FiniteSemigroup& g) {
  auto e = identity_element(g);
  if (!e) throw NotAGroupError("no identity element");
  return *e;
}

std::size_t element_order(const FiniteSemigroup& g, std::size_t x,
                          std::size_t e) {
  std::size_t p = x;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (p == e) return k;
    p = g.mul(p, x);
  }
  throw NotAGroupError("element " + std::to_string(x) +
                       " has no power equal to the identity");
}

std::size_t inverse_of(const FiniteSemigroup& g, std::size_t x,
                       std::size_t e) {
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == e && g.mul(y, x) == e) return y;
  throw NotAGroupError("element " + std::to_string(x) + " not invertible");
}

// Invariant-factor name of an abelian group, derived from the element-order
// histogram (which determines the group in the abelian case): "C2xC4" etc.
std::string abelian_name(const std::map<std::size_t, std::size_t>& hist,
                         std::size_t n) {
  if (n == 1) return "C1";
  std::map<std::size_t, std::vector<std::size_t>> primary;  // p -> exponents
  std::size_t m = n;
  for (std::size_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    // f_k = #elements of order dividing p^k
    std::vector<std::size_t> parts_ge;  // parts_ge[k-1] = #parts >= k
    std::size_t prev_log = 0;
    for (std::size_t pk = p;; pk *= p) {
      std::size_t f = 0;
      for (auto [d, c] : hist) {
        std::size_t t = d;
        while (t % p == 0) t /= p;
        if (t == 1 && d <= pk) f += c;
      }
      std::size_t log = 0;
      for (std::size_t q = f; q > 1; q /= p) ++log;
      if (log == prev_log) break;
      parts_ge.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<std::size_t> exps;
    for (std::size_t k = 0; k < parts_ge.size(); ++k) {
      std::size_t exactly =
          parts_ge[k] - (k + 1 < parts_ge.size() ? parts_ge[k + 1] : 0);
      for (std::size_t i = 0; i < exactly; ++i) {
        std::size_t pk = 1;
        for (std::size_t j = 0; j <= k; ++j) pk *= p;
        exps.push_back(pk);
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    primary[p] = exps;
  }
  std::vector<std::size_t> invariant;
  for (bool more = true; more;) {
    more = false;
    std::size_t d = 1;
    for (auto& [p, exps] : primary)
      if (!exps.empty()) {
        d *= exps.front();
        exps.erase(exps.begin());
        more = true;
      }
    if (more) invariant.push_back(d);
  }
  std::sort(invariant.begin(), invariant.end());
  std::string name;
  for (std::size_t d : invariant)
    name += (name.empty() ? "C" : "xC") + std::to_string(d);
  return name;
}

}  // namespace

GroupDesc group_desc(const FiniteSemigroup& g) {
  std::size_t e = require_identity(g);
  GroupDesc d;
  d.order = g.order();
  for (std::size_t x = 0; x < g.order(); ++x) {
    inverse_of(g, x, e);
    std::size_t o = element_order(g, x, e);
    d.order_histogram[o]++;
    d.exponent = std::lcm(d.exponent, o);
  }
  d.abelian = true;
  for (std::size_t a = 0; a < g.order() && d.abelian; ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        d.abelian = false;
        break;
      }
  if (d.abelian) {
    d.recognized = abelian_name(d.order_histogram, d.order);
  } else if (auto t = exceptional_group(g)) {
    d.recognized = to_string(*t);
  } else if (d.order == 8 && isomorphic(g, quaternion_group_8())) {
    d.recognized = "Q8";
  } else if (is_hamiltonian_2group(g)) {
    d.recognized = "Hamiltonian2(" + std::to_string(d.order) + ")";
  }
  return d;
}

bool is_hamiltonian_2group(const FiniteSemigroup& g) {
  std::size_t e = require_identity(g);
  std::size_t n = g.order();
  if ((n & (n - 1)) != 0 || n == 1) return false;  // not a 2-power
  bool abelian = true;
  for (std::size_t a = 0; a < n && abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        abelian = false;
        break;
      }
  if (abelian) return false;
  // every cyclic subgroup normal <=> every subgroup normal
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> cyc(n, false);
    std::size_t p = a;
    while (!cyc[p]) {
      cyc[p] = true;
      p = g.mul(p, a);
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t xinv = inverse_of(g, x, e);
      if (!cyc[g.mul(g.mul(x, a), xinv)]) return false;
    }
  }
  return true;
}

bool is_higman(const FiniteSemigroup& g) {
  GroupDesc d = group_desc(g);
  if (d.abelian && (4 % d.exponent == 0 || 6 % d.exponent == 0)) return true;
  return is_hamiltonian_2group(g);
}

std::optional<Type2Cyclic> type2_cyclic(const FiniteSemigroup& g) {
  GroupDesc d = group_desc(g);
  bool cyclic = d.abelian && d.exponent == d.order;
  if (!cyclic) return std::nullopt;
  switch (d.order) {
    case 5: return Type2Cyclic::C5;
    case 8: return Type2Cyclic::C8;
    case 12: return Type2Cyclic::C12;
    default: return std::nullopt;
  }
}

std::optional<ExceptionalGroup> exceptional_group(const FiniteSemigroup& g) {
  require_identity(g);
  switch (g.order()) {
    case 6:
      if (isomorphic(g, symmetric_group_3())) return ExceptionalGroup::S3;
      break;
    case 8:
      if (isomorphic(g, dihedral_group_4())) return ExceptionalGroup::D4;
      break;
    case 12:
      if (isomorphic(g, q12_group())) return ExceptionalGroup::Q12;
      break;
    case 16:
      if (isomorphic(g, c4_semidirect_c4())) return ExceptionalGroup::C4sdC4;
      break;
    default: break;
  }
  return std::nullopt;
}

QuadraticClass quadratic_class(const FiniteSemigroup& g) {
  GroupDesc d = group_desc(g);
  bool cyclic = d.abelian && d.exponent == d.order;
  if (cyclic && d.order == 3) return QuadraticClass::C3;
  if (cyclic && d.order == 4) return QuadraticClass::C4;
  if (cyclic && d.order == 8) return QuadraticClass::C8;
  if (d.order == 8 && !d.abelian && isomorphic(g, quaternion_group_8()))
    return QuadraticClass::Q8;
  if (d.abelian && 2 % d.exponent == 0) return QuadraticClass::ElemAbelian2;
  if (d.abelian && 4 % d.exponent == 0) return QuadraticClass::AbelianExp4;
  if (d.abelian && 6 % d.exponent == 0) return QuadraticClass::AbelianExp6;
  return QuadraticClass::Other;
}

std::string to_string(Type2Cyclic t) {
  switch (t) {
    case Type2Cyclic::C5: return "C5";
    case Type2Cyclic::C8: return "C8";
    case Type2Cyclic::C12: return "C12";
  }
  return "";
}

std::string to_string(ExceptionalGroup t) {
  switch (t) {
    case ExceptionalGroup::S3: return "S3";
    case ExceptionalGroup::D4: return "D4";
    case ExceptionalGroup::Q12: return "Q12";
    case ExceptionalGroup::C4sdC4: return "C4sdC4";
  }
  return "";
}

std::string to_string(QuadraticClass t) {
  switch (t) {
    case QuadraticClass::ElemAbelian2: return "ElemAbelian2";
    case QuadraticClass::AbelianExp4: return "AbelianExp4";
    case QuadraticClass::AbelianExp6: return "AbelianExp6";
    case QuadraticClass::C3: return "C3";
    case QuadraticClass::C4: return "C4";
    case QuadraticClass::Q8: return "Q8";
    case QuadraticClass::C8: return "C8";
    case QuadraticClass::Other: return "Other";
  }
  return "";
}

// --- builders -------------------------------------------------------------

FiniteSemigroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteSemigroup(std::move(t));
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  auto idx = [&](std::size_t i, std::size_t j) {
    return i * b.order() + j;
  };
  for (std::size_t i1 = 0; i1 < a.order(); ++i1)
    for (std::size_t j1 = 0; j1 < b.order(); ++j1)
      for (std::size_t i2 = 0; i2 < a.order(); ++i2)
        for (std::size_t j2 = 0; j2 < b.order(); ++j2)
          t[idx(i1, j1)][idx(i2, j2)] = idx(a.mul(i1, i2), b.mul(j1, j2));
  return FiniteSemigroup(std::move(t));
}

FiniteSemigroup semidirect_cyclic(std::size_t m, std::size_t n, long t) {
  long tm = ((t % static_cast<long>(m)) + static_cast<long>(m)) %
            static_cast<long>(m);
  // action of the j-th power of the C_n generator: a -> a^(t^j)
  std::vector<std::size_t> tpow(n);
  tpow[0] = 1 % m;
  for (std::size_t j = 1; j < n; ++j)
    tpow[j] = (tpow[j - 1] * static_cast<std::size_t>(tm)) % m;
  if ((tpow[n - 1] * static_cast<std::size_t>(tm)) % m != 1 % m)
    throw Error("semidirect action exponent does not have order dividing n");
  std::size_t total = m * n;
  std::vector<std::vector<std::size_t>> table(total,
                                              std::vector<std::size_t>(total));
  auto idx = [&](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i1 = 0; i1 < m; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2)
          table[idx(i1, j1)][idx(i2, j2)] =
              idx((i1 + tpow[j1] * i2) % m, (j1 + j2) % n);
  return FiniteSemigroup(std::move(table));
}

FiniteSemigroup symmetric_group_3() { return semidirect_cyclic(3, 2, -1); }
FiniteSemigroup dihedral_group_4() { return semidirect_cyclic(4, 2, -1); }
FiniteSemigroup q12_group() { return semidirect_cyclic(3, 4, -1); }
FiniteSemigroup c4_semidirect_c4() { return semidirect_cyclic(4, 4, -1); }

FiniteSemigroup quaternion_group_8() {
  // elements: 1,-1,i,-i,j,-j,k,-k as (basis, sign) with basis 0..3
  auto enc = [](std::size_t basis, int sign) {
    return basis * 2 + (sign < 0 ? 1 : 0);
  };
  // basis products: table of (result basis, sign) for 1,i,j,k
  static const int bmul[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t b1 = 0; b1 < 4; ++b1)
    for (int s1 : {1, -1})
      for (std::size_t b2 = 0; b2 < 4; ++b2)
        for (int s2 : {1, -1}) {
          std::size_t rb = static_cast<std::size_t>(bmul[b1][b2][0]);
          int rs = bmul[b1][b2][1] * s1 * s2;
          t[enc(b1, s1)][enc(b2, s2)] = enc(rb, rs);
        }
  return FiniteSemigroup(std::move(t));
}

}  // namespace semihyp
