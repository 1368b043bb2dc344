#include "isgcoh/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isgcoh {

FiniteInverseSemigroup FiniteInverseSemigroup::build(
    std::vector<std::string> names, std::vector<std::vector<int>> table) {
  FiniteInverseSemigroup S;
  S.n_ = static_cast<int>(table.size());
  if (S.n_ == 0) throw std::invalid_argument("empty semigroup");
  if (names.size() != table.size())
    throw std::invalid_argument("names/table size mismatch");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != S.n_)
      throw std::invalid_argument("table is not square");
    for (int v : row)
      if (v < 0 || v >= S.n_)
        throw std::invalid_argument("table entry out of range");
  }
  S.names_ = std::move(names);
  S.table_ = std::move(table);

  for (int x = 0; x < S.n_; ++x)
    for (int y = 0; y < S.n_; ++y)
      for (int z = 0; z < S.n_; ++z)
        if (S.mul(S.mul(x, y), z) != S.mul(x, S.mul(y, z)))
          throw NotAssociative(x, y, z);

  S.inv_.assign(S.n_, -1);
  for (int s = 0; s < S.n_; ++s) {
    int found = -1;
    for (int t = 0; t < S.n_; ++t) {
      if (S.mul(S.mul(s, t), s) == s && S.mul(S.mul(t, s), t) == t) {
        if (found != -1)
          throw NotInverse(s, "element " + S.names_[s] +
                                  " has more than one inverse");
        found = t;
      }
    }
    if (found == -1)
      throw NotInverse(s, "element " + S.names_[s] + " has no inverse");
    S.inv_[s] = found;
  }

  for (int s = 0; s < S.n_; ++s)
    if (S.mul(s, s) == s) S.idems_.push_back(s);
  // inverse semigroups have commuting idempotents; unique inverses alone do
  // not guarantee it, so check.
  for (int e : S.idems_)
    for (int f : S.idems_)
      if (S.mul(e, f) != S.mul(f, e))
        throw NotInverse(e, "idempotents " + S.names_[e] + " and " +
                                S.names_[f] + " do not commute");

  S.leq_.assign(S.n_, std::vector<char>(S.n_, 0));
  for (int a = 0; a < S.n_; ++a)
    for (int b = 0; b < S.n_; ++b)
      S.leq_[a][b] = (S.mul(S.r(a), b) == a) ? 1 : 0;

  for (int e = 0; e < S.n_; ++e) {
    bool id = true;
    for (int s = 0; s < S.n_ && id; ++s)
      id = (S.mul(e, s) == s && S.mul(s, e) == s);
    if (id) {
      S.identity_ = e;
      break;
    }
  }
  return S;
}

std::optional<int> FiniteInverseSemigroup::id_of(const std::string& nm) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == nm) return i;
  return std::nullopt;
}

int FiniteInverseSemigroup::prod(const std::vector<int>& xs) const {
  if (xs.empty()) throw std::invalid_argument("empty product");
  int acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = mul(acc, xs[i]);
  return acc;
}

bool FiniteInverseSemigroup::idempotents_central() const {
  for (int e : idems_)
    for (int s = 0; s < n_; ++s)
      if (mul(e, s) != mul(s, e)) return false;
  return true;
}

bool FiniteInverseSemigroup::commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool SemigroupMorphism::is_homomorphism() const {
  for (int a = 0; a < source->size(); ++a)
    for (int b = 0; b < source->size(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return true;
}

bool SemigroupMorphism::is_surjective() const {
  std::vector<char> hit(target->size(), 0);
  for (int a = 0; a < source->size(); ++a) hit[map[a]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool check_idempotent_separating(const SemigroupMorphism& f) {
  const auto& E = f.source->idempotents();
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = i + 1; j < E.size(); ++j)
      if (f.map[E[i]] == f.map[E[j]]) return false;
  return true;
}

std::optional<std::map<int, std::vector<int>>> clifford_components(
    const FiniteInverseSemigroup& S) {
  if (!S.idempotents_central()) return std::nullopt;
  std::map<int, std::vector<int>> comps;
  for (int s = 0; s < S.size(); ++s) {
    if (S.d(s) != S.r(s)) return std::nullopt;
    comps[S.d(s)].push_back(s);
  }
  return comps;
}

void GroupKernelNormalSystem::validate() const {
  const auto& S = *ambient;
  if (static_cast<int>(member.size()) != S.size())
    throw InvalidKernelSystem("indicator size mismatch");
  bool any = false;
  for (int s = 0; s < S.size(); ++s)
    if (member[s]) any = true;
  if (!any) throw InvalidKernelSystem("empty");

  for (int a = 0; a < S.size(); ++a) {
    if (!member[a]) continue;
    if (!member[S.inv(a)])
      throw InvalidKernelSystem("not closed under inverses at " + S.name(a));
    for (int b = 0; b < S.size(); ++b)
      if (member[b] && !member[S.mul(a, b)])
        throw InvalidKernelSystem("not closed under product at " + S.name(a) +
                                  "," + S.name(b));
  }
  for (int s = 0; s < S.size(); ++s)
    for (int k = 0; k < S.size(); ++k)
      if (member[k] && !member[S.mul(S.mul(s, k), S.inv(s))])
        throw InvalidKernelSystem("not conjugation closed at s=" + S.name(s) +
                                  " k=" + S.name(k));
  // each member must lie in a group over an idempotent of S: d(k) = r(k)
  for (int k = 0; k < S.size(); ++k) {
    if (!member[k]) continue;
    if (S.d(k) != S.r(k))
      throw InvalidKernelSystem("member " + S.name(k) +
                                " is not in a group H-class over E(S)");
  }
  // one group per idempotent of the ambient semigroup
  for (int e : S.idempotents())
    if (!member[e])
      throw InvalidKernelSystem("missing idempotent " + S.name(e));
}

std::pair<FiniteInverseSemigroup, SemigroupMorphism> quotient_by_kernel_system(
    const FiniteInverseSemigroup& S, const GroupKernelNormalSystem& K) {
  K.validate();
  const int n = S.size();
  // induced idempotent-separating congruence:
  //   s ~ t  iff  s t^-1 in K, d(s) = d(t) and r(s) = r(t)
  auto related = [&](int s, int t) {
    return S.d(s) == S.d(t) && S.r(s) == S.r(t) &&
           K.contains(S.mul(s, S.inv(t)));
  };
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int s = 0; s < n; ++s) {
    for (size_t c = 0; c < reps.size(); ++c)
      if (related(s, reps[c])) {
        cls[s] = static_cast<int>(c);
        break;
      }
    if (cls[s] == -1) {
      cls[s] = static_cast<int>(reps.size());
      reps.push_back(s);
    }
  }
  const int m = static_cast<int>(reps.size());
  // well-definedness of the quotient multiplication
  std::vector<std::vector<int>> qt(m, std::vector<int>(m, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int& slot = qt[cls[a]][cls[b]];
      int v = cls[S.mul(a, b)];
      if (slot == -1)
        slot = v;
      else if (slot != v)
        throw InvalidKernelSystem("induced relation is not a congruence");
    }
  std::vector<std::string> names(m);
  for (int c = 0; c < m; ++c) names[c] = "[" + S.name(reps[c]) + "]";
  auto Q = FiniteInverseSemigroup::build(std::move(names), std::move(qt));
  SemigroupMorphism pi{&S, nullptr, cls};
  // verify: idempotent-separating epimorphism with pi^{-1}(E) = K
  for (int s = 0; s < n; ++s) {
    bool qi = Q.idem(cls[s]);
    if (qi != (K.contains(s) != 0))
      throw InvalidKernelSystem(
          "projection does not pull idempotents back to K at " + S.name(s));
  }
  return {std::move(Q), std::move(pi)};
}

FInverseResult is_f_inverse_monoid(const FiniteInverseSemigroup& S) {
  FInverseResult res;
  res.monoid = S.identity().has_value();
  const int n = S.size();
  // common-lower-bound relation, transitively closed via components
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b) {
        if (comp[b] != -1) continue;
        bool meet = false;
        for (int u = 0; u < n && !meet; ++u)
          meet = S.leq(u, a) && S.leq(u, b);
        if (meet) {
          comp[b] = nc;
          stack.push_back(b);
        }
      }
    }
    ++nc;
  }
  res.sigma_class = comp;
  res.max_of_class.assign(n, -1);
  std::vector<int> best(nc, -1);
  bool all_have_max = true;
  for (int c = 0; c < nc; ++c) {
    for (int s = 0; s < n; ++s) {
      if (comp[s] != c) continue;
      bool top = true;
      for (int t = 0; t < n && top; ++t)
        if (comp[t] == c && !S.leq(t, s)) top = false;
      if (top) {
        best[c] = s;
        break;
      }
    }
    if (best[c] == -1) all_have_max = false;
  }
  for (int s = 0; s < n; ++s) res.max_of_class[s] = best[comp[s]];
  res.f_inverse = res.monoid && all_have_max;
  return res;
}

}  // namespace isgcoh
