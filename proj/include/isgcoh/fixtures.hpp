#pragma once

#include "isgcoh/tmodule.hpp"

#include <memory>

namespace isgcoh::fixtures {

// the two-element group {1, g}
FiniteInverseSemigroup z2();
// two-element chain semilattice monoid {e > f}
FiniteInverseSemigroup chain2();
// Z2 x chain2, a four-element Clifford F-inverse monoid
FiniteInverseSemigroup clifford4();
// symmetric inverse monoid on two points (7 elements, built from partial
// injections)
FiniteInverseSemigroup sym_inv2();
// cyclic group of order 4, names 0..3 under addition
FiniteInverseSemigroup z4();

// coefficient semilattices of abelian groups
SemilatticeOfAbelianGroups z2_coeff();          // one component, Z2 = {1, a}
SemilatticeOfAbelianGroups chain_coeff();       // Z2 over e, trivial over f

// bundles owning their semigroups; M points into the bundle
struct ModuleBundle {
  std::unique_ptr<FiniteInverseSemigroup> T;
  std::unique_ptr<SemilatticeOfAbelianGroups> A;
  TModule M;
};

ModuleBundle z2_module();         // T = Z2, A = Z2, trivial action
ModuleBundle chain2_module();     // T = chain2, A = chain_coeff
ModuleBundle clifford4_module();  // T = clifford4, A = chain_coeff

}  // namespace isgcoh::fixtures
