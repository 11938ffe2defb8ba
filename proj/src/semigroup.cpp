#include "semihyp/semigroup.hpp"

#include <algorithm>
#include <set>

namespace semihyp {

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<std::size_t>> table,
                                 std::vector<std::string> names)
    : order_(table.size()), table_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0)
    throw Error("empty Cayley table: semigroups are non-empty");
  for (std::size_t i = 0; i < order_; ++i) {
    if (table_[i].size() != order_) throw OutOfRangeEntryError(i, table_[i].size());
    for (std::size_t j = 0; j < order_; ++j)
      if (table_[i][j] >= order_) throw OutOfRangeEntryError(i, j);
  }
  if (!names_.empty() && names_.size() != order_)
    throw Error("names list has wrong length");

  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      std::size_t ab = table_[a][b];
      for (std::size_t c = 0; c < order_; ++c)
        if (table_[ab][c] != table_[a][table_[b][c]])
          throw NonAssociativeError(a, b, c);
    }

  if (order_ >= 2) {
    for (std::size_t z = 0; z < order_; ++z) {
      bool absorbing = true;
      for (std::size_t x = 0; x < order_ && absorbing; ++x)
        absorbing = table_[z][x] == z && table_[x][z] == z;
      if (absorbing) {
        zero_ = z;  // unique: two zeros z,z' would give z = z z' = z'
        break;
      }
    }
  }
}

std::string FiniteSemigroup::name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "s" + std::to_string(i);
}

std::size_t FiniteSemigroup::pow(std::size_t a, std::size_t k) const {
  std::size_t r = a;
  for (std::size_t i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

FiniteSemigroup validate(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> names) {
  return FiniteSemigroup(std::move(table), std::move(names));
}

std::vector<std::size_t> idempotents(const FiniteSemigroup& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < s.order(); ++x)
    if (s.mul(x, x) == x) out.push_back(x);
  return out;
}

bool is_idempotent(const FiniteSemigroup& s, std::size_t x) {
  return s.mul(x, x) == x;
}

bool is_nilpotent(const FiniteSemigroup& s, std::size_t x) {
  if (!s.has_zero()) return false;
  std::size_t theta = *s.zero();
  if (x == theta) return false;
  std::size_t p = x;
  for (std::size_t k = 0; k < s.order(); ++k) {
    if (p == theta) return true;
    p = s.mul(p, x);
  }
  return p == theta;
}

std::vector<std::size_t> nilpotents(const FiniteSemigroup& s) {
  if (!s.has_zero()) throw NoZeroElementError();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < s.order(); ++x)
    if (is_nilpotent(s, x)) out.push_back(x);
  return out;
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  std::size_t n = s.order();
  std::vector<std::vector<std::size_t>> t(n + 1,
                                          std::vector<std::size_t>(n + 1, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s.mul(i, j);
  std::vector<std::string> names;
  if (s.has_names()) {
    names = s.names();
    names.push_back("theta");
  }
  return FiniteSemigroup(std::move(t), std::move(names));
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  std::size_t n = s.order();
  std::vector<std::vector<std::size_t>> t(n + 1,
                                          std::vector<std::size_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s.mul(i, j);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][n] = i;
    t[n][i] = i;
  }
  std::vector<std::string> names;
  if (s.has_names()) {
    names = s.names();
    names.push_back("1");
  }
  return FiniteSemigroup(std::move(t), std::move(names));
}

FiniteSemigroup ensure_zero(const FiniteSemigroup& s) {
  return s.has_zero() ? s : adjoin_zero(s);
}

FiniteSemigroup ensure_identity(const FiniteSemigroup& s) {
  return identity_element(s) ? s : adjoin_identity(s);
}

std::optional<std::size_t> identity_element(const FiniteSemigroup& s) {
  for (std::size_t e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < s.order() && ok; ++x)
      ok = s.mul(e, x) == x && s.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(const FiniteSemigroup& s) {
  auto e = identity_element(s);
  if (!e) return false;
  for (std::size_t x = 0; x < s.order(); ++x) {
    bool invertible = false;
    for (std::size_t y = 0; y < s.order() && !invertible; ++y)
      invertible = s.mul(x, y) == *e && s.mul(y, x) == *e;
    if (!invertible) return false;
  }
  return true;
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> pos(s.order(), s.order());
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = i;
  std::vector<std::vector<std::size_t>> t(
      elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      std::size_t p = s.mul(elements[i], elements[j]);
      if (pos[p] == s.order())
        throw Error("subset is not closed under multiplication");
      t[i][j] = pos[p];
    }
  std::vector<std::string> names;
  if (s.has_names())
    for (std::size_t e : elements) names.push_back(s.name(e));
  return FiniteSemigroup(std::move(t), std::move(names));
}

std::vector<MaximalSubgroup> maximal_subgroups(const FiniteSemigroup& s) {
  std::vector<MaximalSubgroup> out;
  for (std::size_t e : idempotents(s)) {
    if (s.zero() && *s.zero() == e) continue;
    // local monoid eSe
    std::set<std::size_t> local;
    for (std::size_t x = 0; x < s.order(); ++x)
      local.insert(s.mul(s.mul(e, x), e));
    // group of units of eSe
    std::vector<std::size_t> units;
    for (std::size_t x : local) {
      for (std::size_t y : local)
        if (s.mul(x, y) == e && s.mul(y, x) == e) {
          units.push_back(x);
          break;
        }
    }
    std::sort(units.begin(), units.end());
    out.push_back({e, units, subsemigroup(s, units)});
  }
  return out;
}

FiniteSemigroup chain_semigroups(const std::vector<FiniteSemigroup>& levels) {
  if (levels.empty()) throw Error("chain needs at least one level");
  std::vector<std::size_t> offset(levels.size() + 1, 0);
  for (std::size_t l = 0; l < levels.size(); ++l)
    offset[l + 1] = offset[l] + levels[l].order();
  std::size_t total = offset.back();
  std::vector<std::size_t> level_of(total);
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (std::size_t x = offset[l]; x < offset[l + 1]; ++x) level_of[x] = l;
  std::vector<std::vector<std::size_t>> t(total,
                                          std::vector<std::size_t>(total));
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      std::size_t lx = level_of[x], ly = level_of[y];
      if (lx == ly)
        t[x][y] = offset[lx] + levels[lx].mul(x - offset[lx], y - offset[lx]);
      else
        t[x][y] = lx > ly ? x : y;  // lower level absorbs
    }
  std::vector<std::string> names;
  bool any_names = false;
  for (const auto& lvl : levels) any_names = any_names || lvl.has_names();
  if (any_names)
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (std::size_t x = 0; x < levels[l].order(); ++x)
        names.push_back(levels[l].name(x) + "@" + std::to_string(l));
  return FiniteSemigroup(std::move(t), std::move(names));
}

bool is_inverse(const FiniteSemigroup& s) {
  for (std::size_t a = 0; a < s.order(); ++a) {
    if (s.zero() && *s.zero() == a) continue;
    std::size_t count = 0;
    for (std::size_t b = 0; b < s.order(); ++b)
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) ++count;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace semihyp
