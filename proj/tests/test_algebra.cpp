#include <doctest.h>

#include "helpers.hpp"
#include "semihyp/algebra.hpp"
#include "semihyp/enumerate.hpp"
#include "semihyp/groups.hpp"
#include "semihyp/rees.hpp"
#include "semihyp/series.hpp"

using namespace semihyp;
using namespace semihyp::testing;

namespace {

QVec qv(std::vector<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(make_rational(x));
  return v;
}

}  // namespace

TEST_CASE("contracted algebra of T2") {
  StructureConstantAlgebra a = contracted_algebra(fixtures().at("T2"));
  REQUIRE(a.dim() == 3);
  CHECK(a.labels() == std::vector<std::string>{"e1", "e2", "j0"});
  // e1 j0 = j0, j0 e2 = j0, j0^2 = 0
  CHECK(a.mul(a.basis_vector(0), a.basis_vector(2)) == a.basis_vector(2));
  CHECK(a.mul(a.basis_vector(2), a.basis_vector(1)) == a.basis_vector(2));
  CHECK(qvec_is_zero(a.mul(a.basis_vector(2), a.basis_vector(2))));
}

TEST_CASE("contracted algebra of the null semigroup and of M") {
  StructureConstantAlgebra n = contracted_algebra(null_semigroup_2());
  REQUIRE(n.dim() == 1);
  CHECK(qvec_is_zero(n.mul(n.basis_vector(0), n.basis_vector(0))));

  StructureConstantAlgebra m = contracted_algebra(fixtures().at("M"));
  REQUIRE(m.dim() == 4);
  // matrix-unit structure constants e_ij e_kl = delta_jk e_il,
  // basis order e11, e12, e21, e22
  auto unit = [&](std::size_t i, std::size_t j) {
    return m.basis_vector(i * 2 + j);
  };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          QVec p = m.mul(unit(i, j), unit(k, l));
          if (j == k)
            CHECK(p == unit(i, l));
          else
            CHECK(qvec_is_zero(p));
        }
  CHECK_THROWS_AS(contracted_algebra(cyclic_group(3)), NoZeroElementError);
}

TEST_CASE("group algebras") {
  CHECK(group_algebra(cyclic_group(2)).dim() == 2);
  CHECK(group_algebra(trivial_semigroup()).dim() == 1);
  StructureConstantAlgebra q8 = group_algebra(quaternion_group_8());
  CHECK(q8.dim() == 8);
  // i*j != j*i in the quaternions
  CHECK(q8.mul(q8.basis_vector(2), q8.basis_vector(4)) !=
        q8.mul(q8.basis_vector(4), q8.basis_vector(2)));
  CHECK_THROWS_AS(group_algebra(fixtures().at("T2")), NotAGroupError);
}

TEST_CASE("unity detection") {
  StructureConstantAlgebra t2 = contracted_algebra(fixtures().at("T2"));
  auto u = has_unity(t2);
  REQUIRE(u.has_value());
  CHECK(*u == qv({1, 1, 0}));  // e1 + e2
  // verify independently of the solver
  for (std::size_t i = 0; i < t2.dim(); ++i) {
    CHECK(t2.mul(*u, t2.basis_vector(i)) == t2.basis_vector(i));
    CHECK(t2.mul(t2.basis_vector(i), *u) == t2.basis_vector(i));
  }

  auto uhat = has_unity(contracted_algebra(fixtures().at("T2hat")));
  REQUIRE(uhat.has_value());
  CHECK(*uhat == qv({1, 1, -1}));  // e1 + e2 - j0

  auto uprime = has_unity(contracted_algebra(fixtures().at("T2prime")));
  REQUIRE(uprime.has_value());
  CHECK(*uprime == qv({1, 1, -1, 0}));  // e1 + e2 - e3

  CHECK(!has_unity(contracted_algebra(null_semigroup_2())).has_value());
  auto ug = has_unity(group_algebra(cyclic_group(4)));
  REQUIRE(ug.has_value());
  CHECK(*ug == qv({1, 0, 0, 0}));

  // T2 with an identity adjoined has a unital contracted algebra
  auto u1 = has_unity(contracted_algebra(adjoin_identity(fixtures().at("T2"))));
  REQUIRE(u1.has_value());
  CHECK(*u1 == qv({0, 0, 0, 1}));  // the adjoined identity basis vector
}

TEST_CASE("radical via the trace form") {
  SUBCASE("Q0 T2: one-dimensional non-central radical squaring to zero") {
    RadicalInfo rad = radical(contracted_algebra(fixtures().at("T2")));
    CHECK(rad.dim_j == 1);
    REQUIRE(rad.basis.size() == 1);
    CHECK(rad.basis[0] == qv({0, 0, 1}));  // spanned by j0
    CHECK(rad.nilpotency_index == 2);
    CHECK(!rad.central);
  }
  SUBCASE("QC2 is semisimple") {
    RadicalInfo rad = radical(group_algebra(cyclic_group(2)));
    CHECK(rad.dim_j == 0);
    CHECK(rad.nilpotency_index == 1);
    CHECK(rad.central);
  }
  SUBCASE("the contracted null algebra is its own radical (non-unital path)") {
    RadicalInfo rad = radical(contracted_algebra(null_semigroup_2()));
    CHECK(rad.dim_j == 1);
    CHECK(rad.basis[0] == qv({1}));
    CHECK(rad.nilpotency_index == 2);
    CHECK(rad.central);
  }
  SUBCASE("Q0 T2hat: radical is the j0 line") {
    RadicalInfo rad = radical(contracted_algebra(fixtures().at("T2hat")));
    CHECK(rad.dim_j == 1);
    CHECK(rad.basis[0] == qv({0, 0, 1}));
    CHECK(!rad.central);
  }
  SUBCASE("Q0 M is semisimple") {
    CHECK(radical(contracted_algebra(fixtures().at("M"))).dim_j == 0);
    CHECK(radical(contracted_algebra(fixtures().at("M1"))).dim_j == 0);
  }
  SUBCASE("group algebras are semisimple in characteristic zero") {
    for (std::size_t n : {1, 2, 3, 4, 5, 6, 8, 12})
      CHECK(radical(group_algebra(cyclic_group(n))).dim_j == 0);
    CHECK(radical(group_algebra(quaternion_group_8())).dim_j == 0);
    CHECK(radical(group_algebra(symmetric_group_3())).dim_j == 0);
  }
}

TEST_CASE("radical dimension equals the null factor count on all fixtures") {
  for (const auto& [name, s] : fixtures()) {
    std::size_t nulls = 0;
    for (const auto& f : principal_series(s).factors)
      if (f.tag == FactorTag::Null) ++nulls;
    CHECK(radical(contracted_algebra(s)).dim_j == nulls);
  }
}

TEST_CASE("action scalars on Q0 T2") {
  StructureConstantAlgebra a = contracted_algebra(fixtures().at("T2"));
  RadicalInfo rad = radical(a);
  ActionScalars e1 = action_scalars(a, rad, 0);
  CHECK(e1.lambda == 1);
  CHECK(e1.rho == 0);
  ActionScalars e2 = action_scalars(a, rad, 1);
  CHECK(e2.lambda == 0);
  CHECK(e2.rho == 1);
  ActionScalars j0 = action_scalars(a, rad, 2);
  CHECK(j0.lambda == 0);
  CHECK(j0.rho == 0);

  StructureConstantAlgebra ss = group_algebra(cyclic_group(2));
  CHECK_THROWS_AS(action_scalars(ss, radical(ss), 0), RadicalNotALineError);
}

TEST_CASE("center computations") {
  StructureConstantAlgebra c6 = group_algebra(cyclic_group(6));
  CHECK(center(c6).size() == 6);  // commutative: the whole algebra
  CHECK(center(contracted_algebra(fixtures().at("M"))).size() == 1);
  CHECK(center(contracted_algebra(fixtures().at("T2"))).size() == 1);
  CHECK(center(group_algebra(quaternion_group_8())).size() == 5);
}

TEST_CASE("t2 block check") {
  SUBCASE("Q0 T2 realizes the triangular block with u = e1, v = e2") {
    T2BlockResult r = t2_block_check(contracted_algebra(fixtures().at("T2")));
    REQUIRE(r.found);
    CHECK(r.u == qv({1, 0, 0}));
    CHECK(r.v == qv({0, 1, 0}));
  }
  SUBCASE("Q0 T2prime needs the e3 correction") {
    StructureConstantAlgebra a = contracted_algebra(fixtures().at("T2prime"));
    T2BlockResult r = t2_block_check(a);
    REQUIRE(r.found);
    // the deterministic search settles on u = e1, v = e2 - e3; the pair
    // u = e1 - e3, v = e2 - e3 would do equally well
    CHECK(r.u == qv({1, 0, 0, 0}));
    CHECK(r.v == qv({0, 1, -1, 0}));
    // re-verify the full T2(Q) table independently
    const QVec j0 = radical(a).basis[0];
    CHECK(a.mul(r.u, r.u) == r.u);
    CHECK(a.mul(r.v, r.v) == r.v);
    CHECK(qvec_is_zero(a.mul(r.u, r.v)));
    CHECK(qvec_is_zero(a.mul(r.v, r.u)));
    CHECK(a.mul(r.u, j0) == j0);
    CHECK(qvec_is_zero(a.mul(j0, r.u)));
    CHECK(a.mul(j0, r.v) == j0);
    CHECK(qvec_is_zero(a.mul(r.v, j0)));
  }
  SUBCASE("Q0 T2hat needs the j0 correction") {
    StructureConstantAlgebra a = contracted_algebra(fixtures().at("T2hat"));
    T2BlockResult r = t2_block_check(a);
    REQUIRE(r.found);
    CHECK(r.u == qv({1, 0, 0}));
    CHECK(r.v == qv({0, 1, -1}));  // e2 - j0
    const QVec j0 = radical(a).basis[0];
    CHECK(a.mul(r.u, j0) == j0);
    CHECK(qvec_is_zero(a.mul(r.u, r.v)));
    CHECK(qvec_is_zero(a.mul(r.v, r.u)));
  }
  SUBCASE("semisimple input takes the RadicalNotALine path") {
    CHECK_THROWS_AS(t2_block_check(group_algebra(cyclic_group(2))),
                    RadicalNotALineError);
  }
  SUBCASE("central radical reports no block") {
    // {1, f, theta} with f^2 = theta: the radical line is central
    FiniteSemigroup m3 = from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
                                    {"1", "f", "theta"});
    T2BlockResult r = t2_block_check(contracted_algebra(m3));
    CHECK(!r.found);
    CHECK(r.note == "radical is central");
  }
}

TEST_CASE("radical basis vectors are nilpotent and span an ideal") {
  for (const auto& [name, s] : fixtures()) {
    StructureConstantAlgebra a = contracted_algebra(s);
    RadicalInfo rad = radical(a);
    for (const auto& v : rad.basis) {
      // v^nilpotency_index = 0, v^(nilpotency_index - 1) != 0
      QVec p = v;
      for (std::size_t k = 2; k < rad.nilpotency_index; ++k) p = a.mul(p, v);
      CHECK(!qvec_is_zero(p));
      CHECK(qvec_is_zero(a.mul(p, v)));
      for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(in_span(rad.basis, a.mul(a.basis_vector(i), v)));
        CHECK(in_span(rad.basis, a.mul(v, a.basis_vector(i))));
      }
    }
  }
}

TEST_CASE("a subgroup identity fixing j0 forces the whole subgroup to fix it") {
  // over the basic blocks and the order-3 corpus: whenever the identity e
  // of a maximal subgroup G has e j0 = j0, every g in G has g j0 = j0
  std::vector<FiniteSemigroup> corpus = {fixtures().at("T2"),
                                         fixtures().at("T2hat"),
                                         fixtures().at("T2prime")};
  enumerate_semigroups(3, [&](const FiniteSemigroup& s) {
    corpus.push_back(s);
  });
  for (const auto& s : corpus) {
    FiniteSemigroup st = ensure_zero(s);
    StructureConstantAlgebra a = contracted_algebra(st);
    if (!has_unity(a)) continue;
    RadicalInfo rad = radical(a);
    if (rad.dim_j != 1) continue;
    std::size_t theta = *st.zero();
    auto scalar = [&](std::size_t x) {
      return action_scalars(a, rad, x > theta ? x - 1 : x);
    };
    for (const auto& sub : maximal_subgroups(st)) {
      bool left = scalar(sub.idempotent).lambda == 1;
      bool right = scalar(sub.idempotent).rho == 1;
      for (std::size_t g : sub.elements) {
        if (left) CHECK(scalar(g).lambda == 1);
        if (right) CHECK(scalar(g).rho == 1);
      }
    }
  }
}

TEST_CASE("associativity of structure constants is enforced") {
  // b0*b0 = b1, everything else zero, but (b0 b0) b0 != b0 (b0 b0) would
  // need b1 b0 = b0 b1; break that
  std::vector<std::vector<SparseVec>> bad(2, std::vector<SparseVec>(2));
  bad[0][0] = {{1, make_rational(1)}};
  bad[1][0] = {{0, make_rational(1)}};
  CHECK_THROWS_AS(StructureConstantAlgebra({}, bad), Error);
}

TEST_CASE("adjoining a unity") {
  StructureConstantAlgebra n = contracted_algebra(null_semigroup_2());
  CHECK(!has_unity(n).has_value());
  StructureConstantAlgebra n1 = adjoin_unity(n);
  auto u = has_unity(n1);
  REQUIRE(u.has_value());
  CHECK(*u == qv({0, 1}));
}
