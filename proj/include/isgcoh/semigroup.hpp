#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isgcoh {

struct NotAssociative : std::runtime_error {
  int x, y, z;
  NotAssociative(int x_, int y_, int z_)
      : std::runtime_error("multiplication table is not associative"),
        x(x_), y(y_), z(z_) {}
};

struct NotInverse : std::runtime_error {
  int s;
  explicit NotInverse(int s_, const std::string& why)
      : std::runtime_error("not an inverse semigroup: " + why), s(s_) {}
};

struct InvalidKernelSystem : std::runtime_error {
  explicit InvalidKernelSystem(const std::string& why)
      : std::runtime_error("invalid kernel normal system: " + why) {}
};

// Finite inverse semigroup given by a dense multiplication table.
// Elements are ids 0..n-1; names are kept for rendering and JSON.
class FiniteInverseSemigroup {
 public:
  // Validates associativity and unique inverses; throws on failure.
  static FiniteInverseSemigroup build(std::vector<std::string> names,
                                      std::vector<std::vector<int>> table);

  int size() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  bool idem(int a) const { return mul(a, a) == a; }
  const std::vector<int>& idempotents() const { return idems_; }

  int d(int s) const { return mul(inv_[s], s); }
  int r(int s) const { return mul(s, inv_[s]); }

  // natural partial order: a <= b iff a = (a a^-1) b
  bool leq(int a, int b) const { return leq_[a][b]; }

  // two-sided identity, if present
  std::optional<int> identity() const { return identity_; }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> id_of(const std::string& name) const;

  int prod(const std::vector<int>& xs) const;

  bool idempotents_central() const;
  bool commutative() const;

 private:
  FiniteInverseSemigroup() = default;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> idems_;
  std::vector<std::vector<char>> leq_;
  std::optional<int> identity_;
};

struct SemigroupMorphism {
  const FiniteInverseSemigroup* source = nullptr;
  const FiniteInverseSemigroup* target = nullptr;
  std::vector<int> map;  // source id -> target id

  int operator()(int a) const { return map[a]; }
  bool is_homomorphism() const;
  bool is_surjective() const;
};

// true iff the morphism is injective on idempotents
bool check_idempotent_separating(const SemigroupMorphism& f);

// If idempotents are central, returns e -> group component {s : d(s)=r(s)=e};
// otherwise nullopt.
std::optional<std::map<int, std::vector<int>>> clifford_components(
    const FiniteInverseSemigroup& S);

// Kernel normal system: an inverse subsemigroup K, closed under conjugation,
// whose idempotent-components are disjoint groups, one over each element of
// E(S). Validation throws InvalidKernelSystem with a witness.
struct GroupKernelNormalSystem {
  const FiniteInverseSemigroup* ambient = nullptr;
  std::vector<char> member;  // indicator over ambient elements

  bool contains(int s) const { return member[s] != 0; }
  void validate() const;
};

// Quotient by the idempotent-separating congruence induced by K, together
// with the projection morphism. Verifies post hoc that the relation is a
// congruence and that the projection pulls E back to exactly K.
std::pair<FiniteInverseSemigroup, SemigroupMorphism> quotient_by_kernel_system(
    const FiniteInverseSemigroup& S, const GroupKernelNormalSystem& K);

struct FInverseResult {
  bool monoid = false;
  bool f_inverse = false;
  // per element: id of the greatest element of its sigma-class (-1 if none)
  std::vector<int> max_of_class;
  // per element: index of its sigma-class
  std::vector<int> sigma_class;
};

// sigma-classes are the connected components of the common-lower-bound
// relation; F-inverse means monoid + every class has a greatest element.
FInverseResult is_f_inverse_monoid(const FiniteInverseSemigroup& S);

}  // namespace isgcoh
