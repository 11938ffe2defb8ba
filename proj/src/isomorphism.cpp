#include "semihyp/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace semihyp {

namespace {

// (index, period) of the monogenic subsemigroup, idempotency, nilpotency,
// zero-ness, then one refinement round over the multiset of neighbour
// classes. Equal fingerprints are necessary for any isomorphism to map
// one element to the other.
std::vector<std::size_t> fingerprints(const FiniteSemigroup& s) {
  std::size_t n = s.order();
  using Raw = std::tuple<std::size_t, std::size_t, bool, bool, bool>;
  std::vector<Raw> raw(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> seen_at(n, 0);
    std::vector<std::size_t> powers;
    std::size_t p = x;
    std::size_t index = 0, period = 0;
    for (std::size_t k = 1;; ++k) {
      if (seen_at[p] != 0) {
        index = seen_at[p];
        period = k - seen_at[p];
        break;
      }
      seen_at[p] = k;
      p = s.mul(p, x);
    }
    raw[x] = {index, period, is_idempotent(s, x), is_nilpotent(s, x),
              s.zero() && *s.zero() == x};
  }
  // class ids numbered in sorted key order so they are comparable across
  // two different semigroups
  std::map<Raw, std::size_t> classes;
  for (const Raw& r : raw) classes.emplace(r, 0);
  {
    std::size_t id = 0;
    for (auto& [key, value] : classes) value = id++;
  }
  std::vector<std::size_t> base(n);
  for (std::size_t x = 0; x < n; ++x) base[x] = classes.at(raw[x]);

  // one refinement round: class of x together with the multiset of
  // (class(xy), class(yx)) over all y
  using Refined = std::pair<std::size_t,
                            std::vector<std::pair<std::size_t, std::size_t>>>;
  std::vector<Refined> ref(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::pair<std::size_t, std::size_t>> nb;
    nb.reserve(n);
    for (std::size_t y = 0; y < n; ++y)
      nb.emplace_back(base[s.mul(x, y)], base[s.mul(y, x)]);
    std::sort(nb.begin(), nb.end());
    ref[x] = {base[x], std::move(nb)};
  }
  std::map<Refined, std::size_t> rclasses;
  for (const Refined& r : ref) rclasses.emplace(r, 0);
  {
    std::size_t id = 0;
    for (auto& [key, value] : rclasses) value = id++;
  }
  std::vector<std::size_t> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = rclasses.at(ref[x]);
  return out;
}

struct IsoSearch {
  const FiniteSemigroup& s1;
  const FiniteSemigroup& s2;
  std::vector<std::size_t> fp1, fp2;
  // discovery order: each element is a seed or a product of two earlier ones
  struct Step {
    std::size_t element;
    bool seed;
    std::size_t a, b;  // positions in the discovery list when !seed
  };
  std::vector<Step> steps;
  std::vector<std::size_t> img;   // s1 index -> s2 index (n = unset)
  std::vector<bool> used;         // s2 index taken
  std::size_t n;

  explicit IsoSearch(const FiniteSemigroup& a, const FiniteSemigroup& b)
      : s1(a), s2(b), n(a.order()) {}

  void build_steps() {
    std::vector<bool> known(n, false);
    std::vector<std::size_t> order;  // discovery list
    std::size_t scanned = 0;         // products of order[0..scanned) handled
    while (order.size() < n) {
      // next seed: smallest unknown element
      std::size_t seed = 0;
      while (known[seed]) ++seed;
      known[seed] = true;
      order.push_back(seed);
      steps.push_back({seed, true, 0, 0});
      // close under products, recording derivations
      while (scanned < order.size()) {
        std::size_t pos = scanned++;
        for (std::size_t q = 0; q <= pos; ++q) {
          for (auto [px, py] : {std::pair{pos, q}, std::pair{q, pos}}) {
            std::size_t p = s1.mul(order[px], order[py]);
            if (known[p]) continue;
            known[p] = true;
            order.push_back(p);
            steps.push_back({p, false, px, py});
          }
        }
      }
    }
  }

  bool extend(std::size_t step_idx, std::vector<std::size_t>& order_img) {
    if (step_idx == steps.size()) return verify();
    const Step& st = steps[step_idx];
    if (st.seed) {
      for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || fp2[cand] != fp1[st.element]) continue;
        img[st.element] = cand;
        used[cand] = true;
        order_img.push_back(cand);
        if (extend(step_idx + 1, order_img)) return true;
        order_img.pop_back();
        used[cand] = false;
        img[st.element] = n;
      }
      return false;
    }
    std::size_t forced = s2.mul(order_img[st.a], order_img[st.b]);
    if (used[forced] || fp2[forced] != fp1[st.element]) return false;
    img[st.element] = forced;
    used[forced] = true;
    order_img.push_back(forced);
    if (extend(step_idx + 1, order_img)) return true;
    order_img.pop_back();
    used[forced] = false;
    img[st.element] = n;
    return false;
  }

  bool verify() const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (img[s1.mul(a, b)] != s2.mul(img[a], img[b])) return false;
    return true;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> isomorphic(const FiniteSemigroup& s1,
                                                   const FiniteSemigroup& s2) {
  if (s1.order() != s2.order()) return std::nullopt;
  IsoSearch search(s1, s2);
  search.fp1 = fingerprints(s1);
  search.fp2 = fingerprints(s2);
  {
    auto m1 = search.fp1, m2 = search.fp2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }
  search.build_steps();
  search.img.assign(s1.order(), s1.order());
  search.used.assign(s1.order(), false);
  std::vector<std::size_t> order_img;
  if (!search.extend(0, order_img)) return std::nullopt;
  return search.img;
}

FiniteSemigroup relabel(const FiniteSemigroup& s,
                        const std::vector<std::size_t>& perm) {
  std::size_t n = s.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[perm[i]][perm[j]] = perm[s.mul(i, j)];
  std::vector<std::string> names;
  if (s.has_names()) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[perm[i]] = s.name(i);
  }
  return FiniteSemigroup(std::move(t), std::move(names));
}

std::vector<std::vector<std::size_t>> canonical_table(
    const FiniteSemigroup& s) {
  std::size_t n = s.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> best = s.table();
  do {
    // relabeled[i][j] = perm[t[inv i][inv j]]; compare lazily
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    bool smaller = false, larger = false;
    std::vector<std::vector<std::size_t>> cand(n,
                                               std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n && !larger; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cand[i][j] = perm[s.mul(inv[i], inv[j])];
        if (!smaller && cand[i][j] > best[i][j]) {
          larger = true;
          break;
        }
        if (cand[i][j] < best[i][j]) smaller = true;
      }
    if (smaller && !larger) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace semihyp
