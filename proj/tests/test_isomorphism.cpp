#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "semihyp/enumerate.hpp"
#include "semihyp/groups.hpp"
#include "semihyp/isomorphism.hpp"
#include "semihyp/rees.hpp"

using namespace semihyp;
using namespace semihyp::testing;

namespace {

bool is_product_preserving(const FiniteSemigroup& a, const FiniteSemigroup& b,
                           const std::vector<std::size_t>& phi) {
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("identity self-isomorphism") {
  const FiniteSemigroup& m = fixtures().at("M");
  auto phi = isomorphic(m, m);
  REQUIRE(phi.has_value());
  CHECK(is_product_preserving(m, m, *phi));
}

TEST_CASE("the four order-5 Rees semigroups pair up") {
  const auto& f = fixtures();
  auto m_sigma = isomorphic(f.at("M"), f.at("Msigma"));
  REQUIRE(m_sigma.has_value());
  CHECK(is_product_preserving(f.at("M"), f.at("Msigma"), *m_sigma));

  auto m1_m2 = isomorphic(f.at("M1"), f.at("M2"));
  REQUIRE(m1_m2.has_value());
  CHECK(is_product_preserving(f.at("M1"), f.at("M2"), *m1_m2));

  CHECK(!isomorphic(f.at("M"), f.at("M1")).has_value());
  CHECK(!isomorphic(f.at("Msigma"), f.at("M2")).has_value());
}

TEST_CASE("groups of equal order but different structure") {
  CHECK(!isomorphic(cyclic_group(4),
                    direct_product(cyclic_group(2), cyclic_group(2)))
             .has_value());
  CHECK(!isomorphic(dihedral_group_4(), quaternion_group_8()).has_value());
  CHECK(isomorphic(q12_group(), semidirect_cyclic(3, 4, 2)).has_value());
}

TEST_CASE("isomorphism is reflexive and symmetric under random relabelings") {
  std::mt19937 rng(20240817);
  std::vector<FiniteSemigroup> corpus;
  enumerate_semigroups(3, [&](const FiniteSemigroup& s) {
    corpus.push_back(s);
  });
  for (const auto& s : corpus) {
    std::vector<std::size_t> perm(s.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteSemigroup r = relabel(s, perm);
    auto fwd = isomorphic(s, r);
    auto bwd = isomorphic(r, s);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    CHECK(is_product_preserving(s, r, *fwd));
    CHECK(is_product_preserving(r, s, *bwd));
  }
}

TEST_CASE("distinct enumeration representatives are never isomorphic") {
  std::vector<FiniteSemigroup> reps;
  enumerate_semigroups(3, [&](const FiniteSemigroup& s) {
    reps.push_back(s);
  });
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK(!isomorphic(reps[i], reps[j]).has_value());
}

TEST_CASE("canonical table is a relabeling invariant") {
  std::mt19937 rng(7);
  const FiniteSemigroup& t2p = fixtures().at("T2prime");
  auto canon = canonical_table(t2p);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> perm(t2p.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_table(relabel(t2p, perm)) == canon);
  }
}
