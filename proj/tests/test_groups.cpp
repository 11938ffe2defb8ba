#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "semihyp/groups.hpp"
#include "semihyp/isomorphism.hpp"

using namespace semihyp;
using namespace semihyp::testing;

namespace {

std::vector<FiniteSemigroup> reference_groups() {
  return {cyclic_group(1),
          cyclic_group(2),
          cyclic_group(3),
          cyclic_group(4),
          cyclic_group(5),
          cyclic_group(6),
          cyclic_group(7),
          cyclic_group(8),
          cyclic_group(12),
          direct_product(cyclic_group(2), cyclic_group(2)),
          direct_product(cyclic_group(2), cyclic_group(4)),
          direct_product(cyclic_group(3), cyclic_group(3)),
          symmetric_group_3(),
          dihedral_group_4(),
          quaternion_group_8(),
          q12_group(),
          c4_semidirect_c4(),
          direct_product(quaternion_group_8(), cyclic_group(2))};
}

}  // namespace

TEST_CASE("group_desc basics") {
  GroupDesc c4 = group_desc(cyclic_group(4));
  CHECK(c4.order == 4);
  CHECK(c4.abelian);
  CHECK(c4.exponent == 4);
  CHECK(c4.recognized == "C4");

  GroupDesc q8 = group_desc(quaternion_group_8());
  CHECK(q8.order == 8);
  CHECK(!q8.abelian);
  CHECK(q8.exponent == 4);
  CHECK(q8.order_histogram ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(q8.recognized == "Q8");

  GroupDesc s3 = group_desc(symmetric_group_3());
  CHECK(s3.order == 6);
  CHECK(!s3.abelian);
  CHECK(s3.exponent == 6);

  CHECK(group_desc(direct_product(cyclic_group(2), cyclic_group(4)))
            .recognized == "C2xC4");
  CHECK(group_desc(cyclic_group(6)).recognized == "C6");
  CHECK(group_desc(direct_product(quaternion_group_8(), cyclic_group(2)))
            .recognized == "Hamiltonian2(16)");
  CHECK_THROWS_AS(group_desc(left_zero_2()), NotAGroupError);
}

TEST_CASE("exponent divides the group order on all references") {
  for (const auto& g : reference_groups()) {
    GroupDesc d = group_desc(g);
    CHECK(d.order % d.exponent == 0);
    std::size_t total = 0;
    for (auto [o, c] : d.order_histogram) total += c;
    CHECK(total == d.order);
  }
}

TEST_CASE("is_higman") {
  CHECK(is_higman(cyclic_group(1)));
  CHECK(is_higman(cyclic_group(4)));
  CHECK(is_higman(cyclic_group(6)));
  CHECK(is_higman(direct_product(cyclic_group(2), cyclic_group(4))));
  CHECK(is_higman(direct_product(cyclic_group(3), cyclic_group(3))));
  CHECK(is_higman(quaternion_group_8()));
  CHECK(is_higman(direct_product(quaternion_group_8(), cyclic_group(2))));
  CHECK(!is_higman(cyclic_group(8)));
  CHECK(!is_higman(cyclic_group(5)));
  CHECK(!is_higman(cyclic_group(7)));
  CHECK(!is_higman(symmetric_group_3()));
  CHECK(!is_higman(dihedral_group_4()));
  CHECK(!is_higman(c4_semidirect_c4()));
}

TEST_CASE("hamiltonian 2-groups") {
  CHECK(is_hamiltonian_2group(quaternion_group_8()));
  CHECK(!is_hamiltonian_2group(cyclic_group(8)));  // abelian
  CHECK(!is_hamiltonian_2group(symmetric_group_3()));
  // D4 has a non-normal cyclic subgroup: find one by brute force
  FiniteSemigroup d4 = dihedral_group_4();
  std::size_t e = *identity_element(d4);
  bool witness = false;
  for (std::size_t a = 0; a < d4.order() && !witness; ++a) {
    std::vector<bool> cyc(d4.order(), false);
    std::size_t p = a;
    while (!cyc[p]) {
      cyc[p] = true;
      p = d4.mul(p, a);
    }
    for (std::size_t x = 0; x < d4.order(); ++x) {
      std::size_t xinv = 0;
      while (d4.mul(x, xinv) != e) ++xinv;
      if (!cyc[d4.mul(d4.mul(x, a), xinv)]) {
        witness = true;
        break;
      }
    }
  }
  CHECK(witness);
  CHECK(!is_hamiltonian_2group(d4));
}

TEST_CASE("type-(ii) cyclic recognition") {
  CHECK(type2_cyclic(cyclic_group(5)) == Type2Cyclic::C5);
  CHECK(type2_cyclic(cyclic_group(8)) == Type2Cyclic::C8);
  CHECK(type2_cyclic(cyclic_group(12)) == Type2Cyclic::C12);
  CHECK(!type2_cyclic(cyclic_group(10)).has_value());
  CHECK(!type2_cyclic(direct_product(cyclic_group(2), cyclic_group(4)))
             .has_value());
  CHECK(!type2_cyclic(q12_group()).has_value());  // order 12 but not cyclic
}

TEST_CASE("exceptional group recognition") {
  CHECK(exceptional_group(symmetric_group_3()) == ExceptionalGroup::S3);
  CHECK(exceptional_group(dihedral_group_4()) == ExceptionalGroup::D4);
  CHECK(exceptional_group(q12_group()) == ExceptionalGroup::Q12);
  CHECK(exceptional_group(c4_semidirect_c4()) == ExceptionalGroup::C4sdC4);
  CHECK(!exceptional_group(quaternion_group_8()).has_value());
  CHECK(!exceptional_group(cyclic_group(12)).has_value());
  CHECK(!exceptional_group(direct_product(cyclic_group(2), cyclic_group(8)))
             .has_value());
}

TEST_CASE("q12 is the dicyclic group of order 12") {
  GroupDesc d = group_desc(q12_group());
  CHECK(d.order == 12);
  CHECK(!d.abelian);
  // dicyclic groups have a unique involution
  CHECK(d.order_histogram.at(2) == 1);
}

TEST_CASE("quadratic table classes") {
  CHECK(quadratic_class(direct_product(cyclic_group(2), cyclic_group(2))) ==
        QuadraticClass::ElemAbelian2);
  CHECK(quadratic_class(cyclic_group(1)) == QuadraticClass::ElemAbelian2);
  CHECK(quadratic_class(cyclic_group(3)) == QuadraticClass::C3);
  CHECK(quadratic_class(cyclic_group(4)) == QuadraticClass::C4);
  CHECK(quadratic_class(cyclic_group(8)) == QuadraticClass::C8);
  CHECK(quadratic_class(quaternion_group_8()) == QuadraticClass::Q8);
  CHECK(quadratic_class(cyclic_group(6)) == QuadraticClass::AbelianExp6);
  CHECK(quadratic_class(direct_product(cyclic_group(2), cyclic_group(4))) ==
        QuadraticClass::AbelianExp4);
  CHECK(quadratic_class(cyclic_group(12)) == QuadraticClass::Other);
  CHECK(quadratic_class(dihedral_group_4()) == QuadraticClass::Other);
}

TEST_CASE("higman, type-(ii) and exceptional classes are pairwise disjoint") {
  for (const auto& g : reference_groups()) {
    int classes = (is_higman(g) ? 1 : 0) +
                  (type2_cyclic(g).has_value() ? 1 : 0) +
                  (exceptional_group(g).has_value() ? 1 : 0);
    CHECK(classes <= 1);
  }
}

TEST_CASE("builders reject broken actions") {
  CHECK_THROWS_AS(semidirect_cyclic(5, 3, 2), Error);  // 2^3 != 1 mod 5
}
