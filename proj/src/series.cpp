#include "semihyp/series.hpp"

#include <algorithm>
#include <deque>

namespace semihyp {

std::string to_string(FactorTag t) {
  switch (t) {
    case FactorTag::Null: return "Null";
    case FactorTag::Group: return "Group";
    case FactorTag::GroupWithZero: return "GroupWithZero";
    case FactorTag::ReesMatrix: return "ReesMatrix";
  }
  return "";
}

bool is_ideal(const FiniteSemigroup& s,
              const std::vector<std::size_t>& subset) {
  std::vector<bool> in(s.order(), false);
  for (std::size_t x : subset) in[x] = true;
  for (std::size_t x : subset)
    for (std::size_t a = 0; a < s.order(); ++a)
      if (!in[s.mul(x, a)] || !in[s.mul(a, x)]) return false;
  return true;
}

std::vector<std::size_t> principal_ideal(const FiniteSemigroup& s,
                                         std::size_t x) {
  std::vector<bool> in(s.order(), false);
  std::deque<std::size_t> queue{x};
  in[x] = true;
  while (!queue.empty()) {
    std::size_t y = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < s.order(); ++a)
      for (std::size_t p : {s.mul(y, a), s.mul(a, y)})
        if (!in[p]) {
          in[p] = true;
          queue.push_back(p);
        }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> j_classes(const FiniteSemigroup& s) {
  std::vector<std::vector<std::size_t>> ideal_of(s.order());
  for (std::size_t x = 0; x < s.order(); ++x)
    ideal_of[x] = principal_ideal(s, x);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(s.order(), false);
  for (std::size_t x = 0; x < s.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t y = x; y < s.order(); ++y)
      if (!assigned[y] && ideal_of[y] == ideal_of[x]) {
        cls.push_back(y);
        assigned[y] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteSemigroup rees_quotient(const FiniteSemigroup& s,
                              const std::vector<std::size_t>& ideal) {
  std::vector<bool> in(s.order(), false);
  for (std::size_t x : ideal) in[x] = true;
  for (std::size_t x : ideal)
    for (std::size_t a = 0; a < s.order(); ++a) {
      if (!in[s.mul(x, a)]) throw NotAnIdealError(x, s.mul(x, a));
      if (!in[s.mul(a, x)]) throw NotAnIdealError(x, s.mul(a, x));
    }
  if (ideal.empty()) return adjoin_zero(s);

  std::vector<std::size_t> kept;
  for (std::size_t x = 0; x < s.order(); ++x)
    if (!in[x]) kept.push_back(x);
  std::size_t m = kept.size() + 1;  // theta last
  std::size_t theta = m - 1;
  std::vector<std::size_t> pos(s.order(), theta);
  for (std::size_t i = 0; i < kept.size(); ++i) pos[kept[i]] = i;
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m, theta));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      std::size_t p = s.mul(kept[i], kept[j]);
      t[i][j] = in[p] ? theta : pos[p];
    }
  std::vector<std::string> names;
  if (s.has_names()) {
    for (std::size_t x : kept) names.push_back(s.name(x));
    names.push_back("theta");
  }
  return FiniteSemigroup(std::move(t), std::move(names));
}

FactorKind factor_classify(const FiniteSemigroup& f, bool whole_group_top) {
  if (!f.has_zero() || f.order() < 2)
    throw PreconditionError(
        "factor classification needs a semigroup with zero of order >= 2");
  std::size_t theta = *f.zero();
  std::vector<std::size_t> nonzero;
  for (std::size_t x = 0; x < f.order(); ++x)
    if (x != theta) nonzero.push_back(x);

  if (f.order() == 2 && f.mul(nonzero[0], nonzero[0]) == theta)
    return {FactorTag::Null, f, std::nullopt};

  bool closed = true;
  for (std::size_t a : nonzero)
    for (std::size_t b : nonzero)
      if (f.mul(a, b) == theta) {
        closed = false;
        break;
      }
  if (closed) {
    FiniteSemigroup part = subsemigroup(f, nonzero);
    if (is_group(part)) {
      FactorTag tag =
          whole_group_top ? FactorTag::Group : FactorTag::GroupWithZero;
      return {tag, f, group_desc(part)};
    }
  }
  return {FactorTag::ReesMatrix, f, std::nullopt};
}

PrincipalSeries principal_series(const FiniteSemigroup& s) {
  bool adjoined = !s.has_zero();
  FiniteSemigroup ambient = ensure_zero(s);
  std::size_t theta = *ambient.zero();
  bool s_is_group = is_group(s);

  // the J-order: class A covers everything inside principal_ideal(any a)
  std::vector<std::vector<std::size_t>> classes = j_classes(ambient);
  std::vector<std::vector<std::size_t>> ideal_of_class(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    ideal_of_class[c] = principal_ideal(ambient, classes[c][0]);

  std::vector<std::size_t> class_of(ambient.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t x : classes[c]) class_of[x] = c;

  std::vector<std::size_t> all(ambient.order());
  for (std::size_t i = 0; i < ambient.order(); ++i) all[i] = i;

  PrincipalSeries series{ambient, adjoined, {all}, {}};
  std::vector<std::size_t> current = all;
  bool first = true;
  while (current != std::vector<std::size_t>{theta}) {
    std::vector<bool> in(ambient.order(), false);
    for (std::size_t x : current) in[x] = true;
    // maximal J-classes within current
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (in[classes[c][0]]) live.push_back(c);
    std::vector<std::size_t> best;
    for (std::size_t c : live) {
      bool maximal = true;
      for (std::size_t d : live) {
        if (d == c) continue;
        const auto& ideal = ideal_of_class[d];
        if (std::binary_search(ideal.begin(), ideal.end(), classes[c][0])) {
          maximal = false;  // c lies inside the ideal generated by d
          break;
        }
      }
      if (!maximal) continue;
      std::vector<std::size_t> candidate;
      for (std::size_t x : current)
        if (class_of[x] != c) candidate.push_back(x);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
    FiniteSemigroup step = subsemigroup(ambient, current);
    std::vector<std::size_t> ideal_positions;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (std::binary_search(best.begin(), best.end(), current[i]))
        ideal_positions.push_back(i);
    FiniteSemigroup factor = rees_quotient(step, ideal_positions);
    bool top_group = first && adjoined && s_is_group;
    series.factors.push_back(factor_classify(factor, top_group));
    series.ideals.push_back(best);
    current = series.ideals.back();
    first = false;
  }
  series.ideals.push_back({});
  return series;
}

}  // namespace semihyp
