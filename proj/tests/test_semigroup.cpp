#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isgcoh/fixtures.hpp"
#include "isgcoh/semigroup.hpp"

using namespace isgcoh;

TEST_CASE("build validates associativity") {
  // 2x2 table with a non-associative entry
  CHECK_THROWS_AS(FiniteInverseSemigroup::build({"a", "b"}, {{0, 1}, {0, 0}}),
                  NotAssociative);
}

TEST_CASE("build rejects non-inverse semigroups") {
  // left zero semigroup: every element is an inverse of every other
  CHECK_THROWS_AS(FiniteInverseSemigroup::build({"a", "b"}, {{0, 0}, {1, 1}}),
                  NotInverse);
}

TEST_CASE("basic structure on fixtures") {
  auto T = fixtures::clifford4();
  CHECK(T.size() == 4);
  CHECK(T.identity() == 0);
  CHECK(T.idempotents() == std::vector<int>{0, 2});
  CHECK(T.inv(1) == 1);
  CHECK(T.inv(3) == 3);
  CHECK(T.d(3) == 2);
  CHECK(T.r(3) == 2);
  // natural order: (g,f) <= (g,e), not conversely
  CHECK(T.leq(3, 1));
  CHECK(!T.leq(1, 3));
  CHECK(T.leq(1, 1));
  CHECK(!T.leq(1, 0));
}

TEST_CASE("natural order via idempotent multipliers") {
  for (auto T : {fixtures::clifford4(), fixtures::sym_inv2()}) {
    for (int a = 0; a < T.size(); ++a)
      for (int b = 0; b < T.size(); ++b) {
        bool via_e = false;
        for (int e : T.idempotents()) via_e = via_e || T.mul(e, b) == a;
        CHECK(T.leq(a, b) == via_e);
      }
  }
}

TEST_CASE("clifford components") {
  auto C = fixtures::clifford4();
  auto comps = clifford_components(C);
  REQUIRE(comps.has_value());
  CHECK(comps->size() == 2);
  CHECK(comps->at(0) == std::vector<int>{0, 1});
  CHECK(comps->at(2) == std::vector<int>{2, 3});

  // symmetric inverse monoid: idempotents not central
  auto I2 = fixtures::sym_inv2();
  CHECK(!I2.idempotents_central());
  CHECK(!clifford_components(I2).has_value());
}

TEST_CASE("kernel normal system and quotient: Z4 by {0,2}") {
  auto Z4 = fixtures::z4();
  GroupKernelNormalSystem K{&Z4, {1, 0, 1, 0}};
  K.validate();
  auto [Q, pi] = quotient_by_kernel_system(Z4, K);
  CHECK(Q.size() == 2);
  CHECK(pi.map[0] == pi.map[2]);
  CHECK(pi.map[1] == pi.map[3]);
  CHECK(pi.map[0] != pi.map[1]);
  pi.target = &Q;
  CHECK(pi.is_homomorphism());
  CHECK(pi.is_surjective());
  CHECK(check_idempotent_separating(pi));
}

TEST_CASE("kernel system validation failures carry witnesses") {
  auto Z4 = fixtures::z4();
  // not closed under product: {0,1}
  GroupKernelNormalSystem bad{&Z4, {1, 1, 0, 0}};
  CHECK_THROWS_AS(bad.validate(), InvalidKernelSystem);
  // missing the idempotent entirely
  GroupKernelNormalSystem empty{&Z4, {0, 0, 1, 0}};
  CHECK_THROWS_AS(empty.validate(), InvalidKernelSystem);
}

TEST_CASE("quotient of clifford4 by its group parts") {
  auto C = fixtures::clifford4();
  // K = whole semigroup: quotient is the 2-chain
  GroupKernelNormalSystem K{&C, {1, 1, 1, 1}};
  auto [Q, pi] = quotient_by_kernel_system(C, K);
  CHECK(Q.size() == 2);
  CHECK(Q.idempotents().size() == 2);
}

TEST_CASE("f-inverse detection") {
  auto C = fixtures::clifford4();
  auto r = is_f_inverse_monoid(C);
  CHECK(r.monoid);
  CHECK(r.f_inverse);
  // sigma-classes: {1,f} and {g,gf}, maxima 1 and g
  CHECK(r.sigma_class[0] == r.sigma_class[2]);
  CHECK(r.sigma_class[1] == r.sigma_class[3]);
  CHECK(r.sigma_class[0] != r.sigma_class[1]);
  CHECK(r.max_of_class[2] == 0);
  CHECK(r.max_of_class[3] == 1);

  auto z2 = fixtures::z2();
  CHECK(is_f_inverse_monoid(z2).f_inverse);

  auto chain = fixtures::chain2();
  auto rc = is_f_inverse_monoid(chain);
  CHECK(rc.monoid);
  // one sigma-class with maximum e
  CHECK(rc.f_inverse);
  CHECK(rc.max_of_class[1] == 0);

  // symmetric inverse monoid is not F-inverse: the sigma-class of (01)
  // and id share the lower bound structure without a common maximum
  auto I2 = fixtures::sym_inv2();
  auto ri = is_f_inverse_monoid(I2);
  CHECK(ri.monoid);
  CHECK(!ri.f_inverse);
}

TEST_CASE("groups are f-inverse with singleton classes") {
  auto Z4 = fixtures::z4();
  auto r = is_f_inverse_monoid(Z4);
  CHECK(r.f_inverse);
  for (int s = 0; s < 4; ++s) CHECK(r.max_of_class[s] == s);
}
