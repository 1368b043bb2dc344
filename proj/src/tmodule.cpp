#include "isgcoh/tmodule.hpp"

#include <algorithm>
#include <set>

namespace isgcoh {

SemilatticeOfAbelianGroups SemilatticeOfAbelianGroups::build(
    FiniteInverseSemigroup s) {
  if (!s.commutative())
    throw std::invalid_argument("coefficient semigroup must be commutative");
  // commutative inverse semigroups are Clifford with abelian components
  return SemilatticeOfAbelianGroups{std::move(s)};
}

std::vector<int> SemilatticeOfAbelianGroups::component_elems(int e) const {
  std::vector<int> out;
  for (int a = 0; a < sg.size(); ++a)
    if (sg.r(a) == e) out.push_back(a);
  return out;
}

int TModule::theta_inv(int ea) const {
  for (int e : T->idempotents())
    if (theta[e] == ea) return e;
  throw std::invalid_argument("theta_inv: not in the image of theta");
}

std::vector<Violation> validate_tmodule(const TModule& M) {
  std::vector<Violation> out;
  const auto& T = *M.T;
  const auto& A = M.A->sg;
  auto nm = [&](int t) { return T.name(t); };
  auto am = [&](int a) { return A.name(a); };

  std::set<int> image;
  for (int e : T.idempotents()) {
    int v = M.theta[e];
    if (v < 0 || v >= A.size() || !A.idem(v)) {
      out.push_back({"theta-into-E(A)", {nm(e)}});
      continue;
    }
    if (!image.insert(v).second) out.push_back({"theta-injective", {nm(e)}});
  }
  for (int ea : A.idempotents())
    if (!image.count(ea)) out.push_back({"theta-surjective", {am(ea)}});
  for (int e : T.idempotents())
    for (int f : T.idempotents())
      if (M.theta[T.mul(e, f)] != A.mul(M.theta[e], M.theta[f]))
        out.push_back({"theta-semilattice-hom", {nm(e), nm(f)}});

  for (int t = 0; t < T.size(); ++t) {
    for (int a = 0; a < A.size(); ++a)
      for (int b = 0; b < A.size(); ++b)
        if (M.eta[t][A.mul(a, b)] != A.mul(M.eta[t][a], M.eta[t][b])) {
          out.push_back({"eta-endomorphism", {nm(t), am(a), am(b)}});
          goto next_t;
        }
  next_t:;
  }
  for (int s = 0; s < T.size(); ++s)
    for (int t = 0; t < T.size(); ++t)
      for (int a = 0; a < A.size(); ++a)
        if (M.eta[T.mul(s, t)][a] != M.eta[s][M.eta[t][a]]) {
          out.push_back({"eta-homomorphism", {nm(s), nm(t), am(a)}});
          s = t = T.size();
          break;
        }
  // TM1: eta_e(a) = theta(e) a
  for (int e : T.idempotents())
    for (int a = 0; a < A.size(); ++a)
      if (M.eta[e][a] != A.mul(M.theta[e], a))
        out.push_back({"TM1", {nm(e), am(a)}});
  // TM2: eta_s(theta(e)) = theta(s e s^-1)
  for (int s = 0; s < T.size(); ++s)
    for (int e : T.idempotents())
      if (M.eta[s][M.theta[e]] != M.theta[T.mul(T.mul(s, e), T.inv(s))])
        out.push_back({"TM2", {nm(s), nm(e)}});
  // relative invertibility with witness eta_{s^-1}
  for (int s = 0; s < T.size(); ++s)
    for (int a = 0; a < A.size(); ++a) {
      if (M.eta[T.inv(s)][M.eta[s][a]] != A.mul(M.theta[T.d(s)], a))
        out.push_back({"eta-rel-inv-left", {nm(s), am(a)}});
      if (M.eta[s][M.eta[T.inv(s)][a]] != A.mul(M.theta[T.r(s)], a))
        out.push_back({"eta-rel-inv-right", {nm(s), am(a)}});
    }
  return out;
}

long long Cochain::tuples() const {
  long long t = 1;
  for (int i = 0; i < degree; ++i) t *= M->T->size();
  return t;
}

long long Cochain::index(const std::vector<int>& s) const {
  long long idx = 0;
  for (int v : s) idx = idx * M->T->size() + v;
  return idx;
}

std::vector<int> Cochain::tuple_at(long long idx) const {
  std::vector<int> s(degree);
  for (int i = degree - 1; i >= 0; --i) {
    s[i] = static_cast<int>(idx % M->T->size());
    idx /= M->T->size();
  }
  return s;
}

int tuple_component_identity(const TModule& M, const std::vector<int>& s) {
  return M.theta[M.T->r(M.T->prod(s))];
}

Cochain trivial_cochain(const TModule& M, int n) {
  Cochain f{&M, n, {}};
  f.vals.resize(f.tuples());
  for (long long i = 0; i < f.tuples(); ++i)
    f.vals[i] = tuple_component_identity(M, f.tuple_at(i));
  return f;
}

bool is_valid_cochain(const Cochain& f) {
  const auto& A = f.M->A->sg;
  for (long long i = 0; i < f.tuples(); ++i)
    if (A.r(f.vals[i]) != tuple_component_identity(*f.M, f.tuple_at(i)))
      return false;
  return true;
}

bool is_trivial(const Cochain& f) { return f == trivial_cochain(*f.M, f.degree); }

Cochain cochain_mul(const Cochain& f, const Cochain& g) {
  Cochain h = f;
  for (size_t i = 0; i < h.vals.size(); ++i)
    h.vals[i] = f.M->A->mul(f.vals[i], g.vals[i]);
  return h;
}

Cochain cochain_inv(const Cochain& f) {
  Cochain h = f;
  for (auto& v : h.vals) v = f.M->A->inv(v);
  return h;
}

Cochain coboundary(const Cochain& f) {
  const auto& M = *f.M;
  const auto& T = *M.T;
  const auto& A = M.A->sg;
  const int n = f.degree;
  Cochain g{&M, n + 1, {}};
  g.vals.resize(g.tuples());
  for (long long idx = 0; idx < g.tuples(); ++idx) {
    auto s = g.tuple_at(idx);
    std::vector<int> tail(s.begin() + 1, s.end());
    int acc = M.eta[s[0]][f.at(tail)];
    for (int i = 1; i <= n; ++i) {
      std::vector<int> merged;
      merged.reserve(n);
      for (int j = 0; j < i - 1; ++j) merged.push_back(s[j]);
      merged.push_back(T.mul(s[i - 1], s[i]));
      for (int j = i + 1; j <= n; ++j) merged.push_back(s[j]);
      int v = f.at(merged);
      acc = A.mul(acc, (i % 2 == 1) ? A.inv(v) : v);
    }
    std::vector<int> head(s.begin(), s.begin() + n);
    int last = f.at(head);
    acc = A.mul(acc, ((n + 1) % 2 == 0) ? last : A.inv(last));
    g.vals[idx] = acc;
  }
  return g;
}

bool is_cocycle(const Cochain& f) { return is_trivial(coboundary(f)); }

bool is_order_preserving(const Cochain& f) {
  const auto& T = *f.M->T;
  const auto& A = f.M->A->sg;
  const long long nt = f.tuples();
  for (long long i = 0; i < nt; ++i) {
    auto s = f.tuple_at(i);
    for (long long j = 0; j < nt; ++j) {
      auto t = f.tuple_at(j);
      bool below = true;
      for (int k = 0; k < f.degree && below; ++k) below = T.leq(s[k], t[k]);
      if (below && !A.leq(f.vals[i], f.vals[j])) return false;
    }
  }
  return true;
}

bool is_order_preserving_left_multipliers(const Cochain& f) {
  const auto& T = *f.M->T;
  const auto& A = f.M->A->sg;
  for (long long i = 0; i < f.tuples(); ++i) {
    auto x = f.tuple_at(i);
    for (int pos = 0; pos < f.degree; ++pos)
      for (int e : T.idempotents()) {
        auto y = x;
        y[pos] = T.mul(e, x[pos]);
        int prefix = e;
        for (int j = pos - 1; j >= 0; --j) prefix = T.mul(x[j], prefix);
        if (f.at(y) != A.mul(f.M->theta[T.r(prefix)], f.vals[i])) return false;
      }
  }
  return true;
}

bool is_order_preserving_right_multipliers(const Cochain& f) {
  const auto& T = *f.M->T;
  const auto& A = f.M->A->sg;
  for (long long i = 0; i < f.tuples(); ++i) {
    auto x = f.tuple_at(i);
    for (int pos = 0; pos < f.degree; ++pos)
      for (int e : T.idempotents()) {
        auto y = x;
        y[pos] = T.mul(x[pos], e);
        int prefix = e;
        for (int j = pos; j >= 0; --j) prefix = T.mul(x[j], prefix);
        if (f.at(y) != A.mul(f.M->theta[T.r(prefix)], f.vals[i])) return false;
      }
  }
  return true;
}

bool is_normalized(const Cochain& f) {
  const auto& M = *f.M;
  const auto& T = *M.T;
  const int n = f.degree;
  // patterns (e, e x1, x2, ..), (.., x_{i-1} e, e, e x_{i+1}, ..),
  // (.., x_{n-1} e, e); each must evaluate to its component identity
  const long long nt = trivial_cochain(M, n - 1 > 0 ? n - 1 : 1).tuples();
  Cochain probe = trivial_cochain(M, n - 1 > 0 ? n - 1 : 1);
  for (long long i = 0; i < (n >= 2 ? nt : 1); ++i) {
    std::vector<int> x =
        n >= 2 ? probe.tuple_at(i) : std::vector<int>{};
    for (int e : T.idempotents())
      for (int pos = 0; pos < n; ++pos) {
        // place e at slot pos, multiply neighbors into e's component
        std::vector<int> s(n);
        for (int j = 0, xi = 0; j < n; ++j) {
          if (j == pos) {
            s[j] = e;
          } else {
            int v = x[xi++];
            if (j == pos - 1) v = T.mul(v, e);
            if (j == pos + 1) v = T.mul(e, v);
            s[j] = v;
          }
        }
        if (f.at(s) != tuple_component_identity(M, s)) return false;
      }
  }
  return true;
}

bool is_strongly_normalized(const Cochain& f) {
  const auto& M = *f.M;
  const auto& T = *M.T;
  const int n = f.degree;
  Cochain probe = trivial_cochain(M, n >= 2 ? n - 1 : 1);
  const long long nt = n >= 2 ? probe.tuples() : 1;
  for (long long i = 0; i < nt; ++i) {
    std::vector<int> x = n >= 2 ? probe.tuple_at(i) : std::vector<int>{};
    for (int e : T.idempotents())
      for (int pos = 0; pos < n; ++pos) {
        std::vector<int> s(n);
        for (int j = 0, xi = 0; j < n; ++j)
          s[j] = (j == pos) ? e : x[xi++];
        if (f.at(s) != tuple_component_identity(M, s)) return false;
      }
  }
  return true;
}

bool normalized_criterion_deg3(const Cochain& c) {
  const auto& M = *c.M;
  const auto& T = *M.T;
  if (c.degree != 3) throw std::invalid_argument("degree 3 only");
  for (int t = 0; t < T.size(); ++t)
    for (int e : T.idempotents()) {
      if (c.at({t, e, e}) != M.theta[T.r(T.mul(t, e))]) return false;
      if (c.at({e, e, t}) != M.theta[T.r(T.mul(e, t))]) return false;
    }
  return true;
}

void for_each_cochain(const TModule& M, int n, bool order_preserving,
                      long long budget,
                      const std::function<void(const Cochain&)>& fn) {
  Cochain f = trivial_cochain(M, n);
  const long long nt = f.tuples();
  std::vector<std::vector<int>> choices(nt);
  long long total = 1;
  for (long long i = 0; i < nt; ++i) {
    choices[i] = M.A->component_elems(M.A->comp(f.vals[i]));
    total *= static_cast<long long>(choices[i].size());
    if (total > budget) throw BudgetExceeded(total, budget);
  }
  std::vector<size_t> pick(nt, 0);
  for (;;) {
    for (long long i = 0; i < nt; ++i) f.vals[i] = choices[i][pick[i]];
    if (!order_preserving || is_order_preserving(f)) fn(f);
    long long i = nt - 1;
    while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
}

CohomologyResult cohomology(const TModule& M, int n, bool order_preserving,
                            long long budget) {
  CohomologyResult res;
  std::vector<Cochain> Z;
  for_each_cochain(M, n, order_preserving, budget, [&](const Cochain& f) {
    ++res.c_order;
    if (is_trivial(coboundary(f))) Z.push_back(f);
  });
  std::set<std::vector<int>> B;
  for_each_cochain(M, n - 1, order_preserving, budget,
                   [&](const Cochain& g) { B.insert(coboundary(g).vals); });
  res.z_order = static_cast<long long>(Z.size());
  res.b_order = static_cast<long long>(B.size());
  for (const auto& z : Z) {
    bool seen = false;
    for (const auto& rep : res.reps)
      if (B.count(cochain_mul(z, cochain_inv(rep)).vals)) {
        seen = true;
        break;
      }
    if (!seen) res.reps.push_back(z);
  }
  res.h_order = static_cast<long long>(res.reps.size());
  return res;
}

std::pair<Cochain, Cochain> normalize_cocycle(const Cochain& c) {
  const auto& M = *c.M;
  const auto& T = *M.T;
  const auto& A = M.A->sg;
  if (c.degree != 3) throw std::invalid_argument("degree 3 only");
  Cochain d = trivial_cochain(M, 2);
  for (long long i = 0; i < d.tuples(); ++i) {
    auto s = d.tuple_at(i);
    int x = s[0], y = s[1];
    d.vals[i] = A.mul(A.inv(c.at({T.r(x), x, y})), c.at({x, y, T.d(y)}));
  }
  return {cochain_mul(c, coboundary(d)), d};
}

Cochain strongly_normalize_witness(const Cochain& c, const Cochain& d) {
  const auto& M = *c.M;
  const auto& T = *M.T;
  const auto& A = M.A->sg;
  Cochain u = trivial_cochain(M, 1);
  for (int t = 0; t < T.size(); ++t)
    u.vals[u.index({t})] = A.inv(d.at({t, T.inv(t)}));
  return cochain_mul(d, coboundary(u));
}

std::optional<Cochain> cohomologous_witness(const Cochain& c,
                                            const Cochain& cp,
                                            long long budget) {
  // constructive route: if both normalize to the same cocycle then
  // c = cp * delta^2(d_cp * d_c^-1)
  auto [cn, dc] = normalize_cocycle(c);
  auto [cpn, dcp] = normalize_cocycle(cp);
  if (cn == cpn) {
    Cochain d = cochain_mul(dcp, cochain_inv(dc));
    if (cochain_mul(coboundary(d), cp) == c) return d;
  }
  std::optional<Cochain> found;
  try {
    for_each_cochain(*c.M, 2, true, budget, [&](const Cochain& d) {
      if (!found && cochain_mul(coboundary(d), cp) == c) found = d;
    });
  } catch (const BudgetExceeded&) {
    if (!found) throw;
  }
  return found;
}

}  // namespace isgcoh
