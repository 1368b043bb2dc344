#pragma once

#include "isgcoh/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace isgcoh {

struct BudgetExceeded : std::runtime_error {
  long long required, budget;
  BudgetExceeded(long long req, long long bud)
      : std::runtime_error("enumeration budget exceeded"),
        required(req), budget(bud) {}
};

// Semilattice of abelian groups, represented as a single commutative
// Clifford semigroup: components are the maximal subgroups, and products
// across components transport both factors down to the component of the
// meet of their idempotents.
struct SemilatticeOfAbelianGroups {
  FiniteInverseSemigroup sg;

  static SemilatticeOfAbelianGroups build(FiniteInverseSemigroup s);

  int size() const { return sg.size(); }
  int mul(int a, int b) const { return sg.mul(a, b); }
  int inv(int a) const { return sg.inv(a); }
  // idempotent of the component containing a
  int comp(int a) const { return sg.r(a); }
  std::vector<int> component_elems(int e) const;
};

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
};

// A T-module: theta an isomorphism E(T) -> E(A) of semilattices, eta a
// homomorphism from T into relatively invertible endomorphisms of A.
struct TModule {
  const FiniteInverseSemigroup* T = nullptr;
  const SemilatticeOfAbelianGroups* A = nullptr;
  std::vector<int> theta;                // T idempotent id -> A idempotent id
  std::vector<std::vector<int>> eta;     // eta[t][a]

  int theta_of(int e) const { return theta[e]; }
  int theta_inv(int ea) const;           // A idempotent -> T idempotent
  int eta_of(int t, int a) const { return eta[t][a]; }
  // identity of the component A_{theta(r(prefix))}
  int theta_r(int t) const { return theta[T->r(t)]; }
  int theta_d(int t) const { return theta[T->d(t)]; }
};

std::vector<Violation> validate_tmodule(const TModule& M);

// n-cochain: a function T^n -> A with f(s1..sn) in the component over
// theta(r(s1...sn)); stored densely over tuple indices in row-major order.
struct Cochain {
  const TModule* M = nullptr;
  int degree = 0;
  std::vector<int> vals;

  long long tuples() const;
  long long index(const std::vector<int>& s) const;
  std::vector<int> tuple_at(long long idx) const;
  int at(const std::vector<int>& s) const { return vals[index(s)]; }
  void set(const std::vector<int>& s, int a) { vals[index(s)] = a; }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.vals == b.vals;
  }
};

// identity of the component a given tuple maps into
int tuple_component_identity(const TModule& M, const std::vector<int>& s);

Cochain trivial_cochain(const TModule& M, int n);
bool is_valid_cochain(const Cochain& f);
bool is_trivial(const Cochain& f);
Cochain cochain_mul(const Cochain& f, const Cochain& g);
Cochain cochain_inv(const Cochain& f);

// (d^n f)(s1..s_{n+1}) = eta_{s1}(f(s2..s_{n+1}))
//                        * prod_i f(s1,..,s_i s_{i+1},..)^{(-1)^i}
//                        * f(s1..sn)^{(-1)^{n+1}}
Cochain coboundary(const Cochain& f);

bool is_cocycle(const Cochain& f);

// f(s) <= f(t) in A whenever s <= t componentwise in T^n
bool is_order_preserving(const Cochain& f);
// equivalent characterization via left multipliers:
// f(x1,..,e xi,..,xn) = theta(r(x1..x_{i-1} e)) f(x1,..,xn)
bool is_order_preserving_left_multipliers(const Cochain& f);
// right-sided analog using d instead of r on suffixes
bool is_order_preserving_right_multipliers(const Cochain& f);

bool is_normalized(const Cochain& f);
bool is_strongly_normalized(const Cochain& f);
// for 3-cocycles: normalized iff c(t,e,e)=theta(t e t^-1), c(e,e,t)=theta(e t t^-1)
bool normalized_criterion_deg3(const Cochain& c);

struct CohomologyResult {
  long long c_order = 0;   // |C^n| (or |C^n_<=|)
  long long z_order = 0;
  long long b_order = 0;
  long long h_order = 0;
  std::vector<Cochain> reps;  // one cocycle per cohomology class, lex order
};

CohomologyResult cohomology(const TModule& M, int n, bool order_preserving,
                            long long budget);

// returns (normalized cocycle c~, the 2-cochain d with c~ = c * d^2 d)
std::pair<Cochain, Cochain> normalize_cocycle(const Cochain& c);

// given c normalized via d, produce d~ = d * delta^1 u with u(t)=d(t,t^-1)^-1,
// so that c~ = c * delta^2 d~ still and d~ is strongly normalized
Cochain strongly_normalize_witness(const Cochain& c, const Cochain& d);

// search C^2_{<=} lexicographically for d with c = (delta^2 d) * cp;
// tries the constructive normalization route first
std::optional<Cochain> cohomologous_witness(const Cochain& c,
                                            const Cochain& cp,
                                            long long budget);

// enumerate all cochains of degree n (optionally order-preserving),
// in lexicographic order of component-local value indices
void for_each_cochain(const TModule& M, int n, bool order_preserving,
                      long long budget,
                      const std::function<void(const Cochain&)>& fn);

}  // namespace isgcoh
