#include "semihyp/rees.hpp"

namespace semihyp {

ReesMatrixSemigroup rees(const FiniteSemigroup& g, std::size_t m,
                         std::size_t n, const SandwichMatrix& p) {
  if (!is_group(g)) throw NotAGroupError("Rees construction needs a group");
  if (m == 0 || n == 0) throw Error("Rees construction needs m, n >= 1");
  if (p.rows != n || p.cols != m || p.entries.size() != n)
    throw Error("sandwich matrix must be n x m");
  for (const auto& row : p.entries) {
    if (row.size() != m) throw Error("sandwich matrix must be n x m");
    for (const auto& e : row)
      if (e && *e >= g.order()) throw Error("sandwich entry outside group");
  }

  std::size_t go = g.order();
  std::size_t total = m * n * go + 1;
  std::size_t theta = total - 1;
  std::vector<std::vector<std::size_t>> t(total,
                                          std::vector<std::size_t>(total, theta));
  auto idx = [&](std::size_t i, std::size_t lam, std::size_t a) {
    return (i * n + lam) * go + a;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < n; ++lam)
      for (std::size_t a = 0; a < go; ++a)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t b = 0; b < go; ++b) {
              const auto& sand = p.entries[lam][j];
              if (!sand) continue;  // theta entry kills the product
              t[idx(i, lam, a)][idx(j, mu, b)] =
                  idx(i, mu, g.mul(g.mul(a, *sand), b));
            }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < n; ++lam)
      for (std::size_t a = 0; a < go; ++a) {
        std::string nm =
            "e" + std::to_string(i + 1) + std::to_string(lam + 1);
        if (go > 1) nm += "[" + g.name(a) + "]";
        names.push_back(nm);
      }
  names.push_back("theta");
  // the constructor re-verifies associativity exhaustively
  FiniteSemigroup s(std::move(t), std::move(names));
  return {g, m, n, p, std::move(s)};
}

namespace {

SandwichMatrix sandwich_2x2(std::optional<std::size_t> p11,
                            std::optional<std::size_t> p12,
                            std::optional<std::size_t> p21,
                            std::optional<std::size_t> p22) {
  return {2, 2, {{p11, p12}, {p21, p22}}};
}

std::map<std::string, FiniteSemigroup> build_fixtures() {
  std::map<std::string, FiniteSemigroup> f;
  FiniteSemigroup trivial(std::vector<std::vector<std::size_t>>{{0}});
  constexpr std::size_t one = 0;  // the trivial group element
  constexpr auto th = std::nullopt;

  f.emplace("M", rees(trivial, 2, 2, sandwich_2x2(one, th, th, one)).semigroup);
  f.emplace("Msigma",
            rees(trivial, 2, 2, sandwich_2x2(th, one, one, th)).semigroup);
  // U - e21 and U - e12
  f.emplace("M1", rees(trivial, 2, 2, sandwich_2x2(one, one, th, one)).semigroup);
  f.emplace("M2", rees(trivial, 2, 2, sandwich_2x2(one, th, one, one)).semigroup);

  // basic blocks, elements (e1, e2, [e3,] j0, theta)
  f.emplace("T2", FiniteSemigroup({{0, 3, 2, 3},
                                   {3, 1, 3, 3},
                                   {3, 2, 3, 3},
                                   {3, 3, 3, 3}},
                                  {"e1", "e2", "j0", "theta"}));
  f.emplace("T2hat", FiniteSemigroup({{0, 2, 2, 3},
                                      {3, 1, 3, 3},
                                      {3, 2, 3, 3},
                                      {3, 3, 3, 3}},
                                     {"e1", "e2", "j0", "theta"}));
  f.emplace("T2prime", FiniteSemigroup({{0, 2, 2, 3, 4},
                                        {2, 1, 2, 4, 4},
                                        {2, 2, 2, 4, 4},
                                        {4, 3, 4, 4, 4},
                                        {4, 4, 4, 4, 4}},
                                       {"e1", "e2", "e3", "j0", "theta"}));
  return f;
}

}  // namespace

const std::map<std::string, FiniteSemigroup>& fixtures() {
  static const std::map<std::string, FiniteSemigroup> f = build_fixtures();
  return f;
}

MunnAlgebra munn(const StructureConstantAlgebra& base, std::size_t m,
                 std::size_t n, const std::vector<std::vector<QVec>>& p) {
  if (p.size() != n) throw Error("sandwich matrix must be n x m");
  for (const auto& row : p) {
    if (row.size() != m) throw Error("sandwich matrix must be n x m");
    for (const auto& e : row)
      if (e.size() != base.dim()) throw Error("sandwich entry dimension");
  }
  std::size_t bd = base.dim();
  std::size_t d = m * n * bd;
  auto idx = [&](std::size_t i, std::size_t lam, std::size_t k) {
    return (i * n + lam) * bd + k;
  };
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < n; ++lam)
      for (std::size_t r = 0; r < bd; ++r)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t s = 0; s < bd; ++s) {
              // (i,lam,r)(j,mu,s) = (i,mu, b_r P[lam][j] b_s)
              QVec mid = base.mul(base.basis_vector(r), p[lam][j]);
              QVec val = base.mul(mid, base.basis_vector(s));
              SparseVec& out = products[idx(i, lam, r)][idx(j, mu, s)];
              for (std::size_t k = 0; k < bd; ++k)
                if (!is_zero(val[k])) out.push_back({idx(i, mu, k), val[k]});
            }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < n; ++lam)
      for (std::size_t k = 0; k < bd; ++k) {
        std::string nm =
            "e" + std::to_string(i + 1) + std::to_string(lam + 1);
        if (bd > 1) nm += "[" + base.label(k) + "]";
        labels.push_back(nm);
      }
  return {StructureConstantAlgebra(std::move(labels), std::move(products)), m,
          n, bd, p};
}

MunnAlgebra munn(const FiniteSemigroup& g, const SandwichMatrix& p) {
  StructureConstantAlgebra base = group_algebra(g);
  std::vector<std::vector<QVec>> entries(p.rows);
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t c = 0; c < p.cols; ++c) {
      QVec e = qvec_zero(base.dim());
      if (p.entries[r][c]) e[*p.entries[r][c]] = 1;
      entries[r].push_back(std::move(e));
    }
  return munn(base, p.cols, p.rows, entries);
}

bool sandwich_invertible(const SandwichMatrix& p, std::size_t group_order) {
  if (group_order > 1) throw UnsupportedBaseError();
  for (const auto& row : p.entries)
    for (const auto& e : row)
      if (e && *e != 0) throw UnsupportedBaseError();
  if (p.rows != p.cols) return false;
  QMatrix m(p.rows, p.cols);
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t c = 0; c < p.cols; ++c)
      if (p.entries[r][c]) m.at(r, c) = 1;
  return inverse(m).has_value();
}

MunnMatrixIso munn_to_matrix_iso(const MunnAlgebra& a) {
  if (a.base_dim != 1) throw UnsupportedBaseError();
  if (a.m != a.n) throw NotInvertibleError();
  std::size_t m = a.m;
  QMatrix p(a.n, a.m);
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t c = 0; c < a.m; ++c) p.at(r, c) = a.sandwich[r][c][0];
  auto pinv = inverse(p);
  if (!pinv) throw NotInvertibleError();

  MunnMatrixIso iso;
  iso.m = m;
  // basis (i, lam) maps to the matrix with row i equal to row lam of P
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < a.n; ++lam) {
      QMatrix img(m, m);
      for (std::size_t c = 0; c < m; ++c) img.at(i, c) = p.at(lam, c);
      iso.images.push_back(std::move(img));
    }

  // multiplicative on all basis pairs
  std::size_t d = a.algebra.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      QMatrix lhs = iso.images[x] * iso.images[y];
      QMatrix rhs(m, m);
      for (const auto& t : a.algebra.product(x, y))
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            rhs.at(r, c) += t.c * iso.images[t.k].at(r, c);
      if (!(lhs == rhs))
        throw InternalInconsistencyError(
            "Munn-to-matrix map is not multiplicative");
    }

  // bijective: the d x m^2 coefficient matrix has full rank d = m^2
  QMatrix coeff(d, m * m);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        coeff.at(x, r * m + c) = iso.images[x].at(r, c);
  if (rank(coeff) != d)
    throw InternalInconsistencyError("Munn-to-matrix map is not bijective");

  // preimage of the identity: X with X o P = I, i.e. X = P^{-1}
  iso.unit_preimage = qvec_zero(d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t lam = 0; lam < a.n; ++lam)
      iso.unit_preimage[i * a.n + lam] = pinv->at(i, lam);
  return iso;
}

}  // namespace semihyp
