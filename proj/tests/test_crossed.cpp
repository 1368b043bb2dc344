#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isgcoh/cover.hpp"
#include "isgcoh/crossed.hpp"
#include "isgcoh/fixtures.hpp"

using namespace isgcoh;

namespace {
SampleConfig quick() {
  SampleConfig cfg;
  cfg.pool = 25;
  return cfg;
}
}  // namespace

TEST_CASE("the identity-style finite extension satisfies all axioms") {
  for (auto bundle : {&fixtures::z2_module, &fixtures::chain2_module,
                      &fixtures::clifford4_module}) {
    auto b = bundle();
    auto X = finite_module_extension(b.M);
    auto v = check_extension(X, quick());
    for (const auto& viol : v) MESSAGE(viol.axiom);
    CHECK(v.empty());
  }
}

TEST_CASE("corrupted lambda is caught as a CM violation") {
  auto b = fixtures::chain2_module();
  auto X = finite_module_extension(b.M);
  const auto& A = b.A->sg;
  X.lambda = [&A](const int&, const int& a) { return A.mul(a, 1); };
  auto v = check_crossed_module(X, quick());
  bool cm = false;
  for (const auto& viol : v)
    cm = cm || viol.axiom == "CM1" || viol.axiom == "CM3";
  CHECK(cm);
  CHECK(!v.empty());
  CHECK(!v[0].witness.empty());
}

TEST_CASE("corrupted beta breaks exactness") {
  auto b = fixtures::clifford4_module();
  auto X = finite_module_extension(b.M);
  X.beta = [](const int&) { return 0; };  // constant at the identity of T
  auto v = check_extension(X, quick());
  bool hit = false;
  for (const auto& viol : v)
    hit = hit || viol.axiom == "CM4" || viol.axiom == "beta-homomorphism" ||
          viol.axiom == "alpha-beta-identity";
  CHECK(hit);
}

TEST_CASE("induced module of the identity-style extension is the original") {
  for (auto bundle : {&fixtures::z2_module, &fixtures::chain2_module,
                      &fixtures::clifford4_module}) {
    auto b = bundle();
    auto X = finite_module_extension(b.M);
    auto [M2, viols] = induced_tmodule(X, quick());
    CHECK(viols.empty());
    // theta only defined on idempotents
    for (int e : b.T->idempotents()) CHECK(M2.theta[e] == b.M.theta[e]);
    CHECK(M2.eta == b.M.eta);
    CHECK(validate_tmodule(M2).empty());
  }
}

TEST_CASE("induced module of a cover extension recovers theta and eta") {
  auto b = fixtures::clifford4_module();
  Cochain c = trivial_cochain(b.M, 3);
  c.set({1, 1, 1}, 1);
  auto ctx = build_extension_from_cocycle(b.M, c, quick());
  auto X = cover_extension(ctx);
  auto v = check_extension(X, quick());
  for (const auto& viol : v) MESSAGE(viol.axiom, ": ", viol.witness[0]);
  CHECK(v.empty());
  auto [M2, viols] = induced_tmodule(X, quick());
  CHECK(viols.empty());
  for (int e : b.T->idempotents()) CHECK(M2.theta[e] == b.M.theta[e]);
  CHECK(M2.eta == b.M.eta);
}

TEST_CASE("identity witness passes equivalence checks") {
  auto b = fixtures::clifford4_module();
  auto X = finite_module_extension(b.M);
  EquivalenceWitness<int, int, int, int> w{
      [](const int& n) { return n; }, [](const int& s) { return s; }};
  CHECK(check_equivalence_witness(X, X, w, quick()).empty());
}

TEST_CASE("perturbed witness fails equivalence checks") {
  auto b = fixtures::z2_module();
  auto X = finite_module_extension(b.M);
  // phi1 swapping the two elements of A is not even a homomorphism here
  EquivalenceWitness<int, int, int, int> w{
      [](const int& n) { return 1 - n; }, [](const int& s) { return s; }};
  auto v = check_equivalence_witness(X, X, w, quick());
  CHECK(!v.empty());
}

TEST_CASE("violation reports stay bounded per axiom") {
  auto b = fixtures::clifford4_module();
  auto X = finite_module_extension(b.M);
  X.lambda = [](const int&, const int&) { return 1; };
  auto v = check_crossed_module(X, quick());
  int cm1 = 0;
  for (const auto& viol : v) cm1 += viol.axiom == "CM1";
  CHECK(cm1 > 0);
  CHECK(cm1 <= 5);
}
