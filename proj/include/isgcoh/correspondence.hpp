#pragma once

#include "isgcoh/extraction.hpp"

namespace isgcoh {

// tau_d over a (not necessarily commutative) carrier: same recursion shape
// as xi with d-values in place of the cocycle products
template <class V>
struct TauOps {
  const FiniteInverseSemigroup* T = nullptr;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&)> inv;
  std::function<V(int)> base;       // value of tau([x])
  std::function<V(int, int)> d;     // d(x, y)
};

template <class V>
V tau(const TauOps<V>& ops, const Word& w) {
  if (w.empty()) throw PreconditionFailed("tau of the empty word");
  const auto& T = *ops.T;
  if (w[0].sign < 0) {
    int x = w[0].base;
    Word rest = w;
    rest[0] = pos(T.inv(x));
    return ops.mul(ops.inv(ops.d(T.inv(x), x)), tau(ops, rest));
  }
  if (w.size() == 1) return ops.base(w[0].base);
  int x = w[0].base, y = w[1].base;
  if (w[1].sign > 0) {
    Word rest(w.begin() + 1, w.end());
    rest[0] = pos(T.mul(x, y));
    return ops.mul(ops.d(x, y), tau(ops, rest));
  }
  int xy1 = T.mul(x, T.inv(y));
  Word rest(w.begin() + 1, w.end());
  rest[0] = pos(xy1);
  return ops.mul(ops.inv(ops.d(xy1, y)), tau(ops, rest));
}

// tau_d valued in the coefficient semilattice, for a 2-cochain d
TauOps<int> tau_ops_coefficients(const TModule& M, const Cochain& d);

// chi(w) = rho(t_1)^{e_1} ... rho(t_n)^{e_n}
template <class SE, class NE>
SE chi(const Extension<SE, NE>& X, const Transversal<SE, NE>& tr,
       const Word& w) {
  if (w.empty()) throw PreconditionFailed("chi of the empty word");
  auto lift = [&](const Letter& l) {
    SE r = tr.rho(l.base);
    return l.sign > 0 ? r : X.S.inv(r);
  };
  SE acc = lift(w[0]);
  for (size_t i = 1; i < w.size(); ++i) acc = X.S.mul(acc, lift(w[i]));
  return acc;
}

using CoverWitness =
    EquivalenceWitness<CoverN, CoverElem, CoverN, CoverElem>;

// c = (delta^2 d) c' with d strongly normalized and order-preserving gives
// an equivalence from the extension of c to the extension of c':
// phi2 = id, phi1(a,e,w) = (tau_d(irr w) a, e, w) off the empty word
CoverWitness equivalence_from_cohomologous(std::shared_ptr<CoverContext> from,
                                           std::shared_ptr<CoverContext> to,
                                           const Cochain& d);

struct Stage {
  std::string name;
  bool ok = false;
  std::vector<Violation> violations;
};

struct RoundTripReport {
  bool ok = true;
  std::vector<Stage> stages;
  std::optional<Cochain> extracted;

  void add(std::string name, std::vector<Violation> v) {
    bool good = v.empty();
    ok = ok && good;
    stages.push_back({std::move(name), good, std::move(v)});
  }
  void add(std::string name, bool good, std::string witness = "") {
    ok = ok && good;
    Stage st{std::move(name), good, {}};
    if (!good && !witness.empty()) st.violations.push_back({"", {witness}});
    stages.push_back(std::move(st));
  }
};

// extension -> cocycle -> cover extension, with the equivalence witness
// phi2(t,w) = rho(r(t)) chi(irr w), phi1(a,e,w) = tau_F(irr w) i(a)
// checked against the original extension
template <class SE, class NE>
RoundTripReport roundtrip_extension(const Extension<SE, NE>& X,
                                    const Transversal<SE, NE>& tr,
                                    const SampleConfig& cfg) {
  RoundTripReport rep;
  rep.add("extension-axioms", check_extension(X, cfg));
  rep.add("admissible-transversals", check_admissible(X, tr, cfg));
  auto [Mind, indv] = induced_tmodule(X, cfg);
  rep.add("induced-module", std::move(indv));
  bool same = Mind.eta == X.M->eta;
  for (int e : X.M->T->idempotents())
    same = same && Mind.theta[e] == X.M->theta[e];
  rep.add("induced-module-matches-declared", same,
          "extension does not induce the declared module structure");
  if (!rep.ok) return rep;

  Cochain c = extract_cocycle(X, tr);
  rep.extracted = c;
  rep.add("extracted-cocycle",
          is_cocycle(c) && is_order_preserving(c) && is_strongly_normalized(c),
          "extracted cochain is not a strongly normalized cocycle");
  if (!rep.ok) return rep;

  auto ctx = build_extension_from_cocycle(*X.M, c, cfg);
  auto Y = cover_extension(ctx);
  rep.add("cover-extension-axioms", check_extension(Y, cfg));

  auto F = lift_factor_set(X, tr, derive_factor_set(X, tr));
  TauOps<NE> ops{
      X.M->T, X.N.mul, X.N.inv,
      [&X, &tr](int x) { return X.alpha(tr.rho(X.M->T->r(x))); },
      [&F](int x, int y) { return F[x][y]; }};
  EquivalenceWitness<CoverN, CoverElem, NE, SE> w;
  w.phi1 = [&X, ops](const CoverN& n) {
    if (n.w.empty()) return X.i(n.a);
    return X.N.mul(tau(ops, n.w), X.i(n.a));
  };
  w.phi2 = [&X, &tr](const CoverElem& s) {
    if (s.w.empty()) return tr.rho(s.t);
    return X.S.mul(tr.rho(X.M->T->r(s.t)), chi(X, tr, s.w));
  };
  rep.add("equivalence-witness", check_equivalence_witness(Y, X, w, cfg));
  return rep;
}

// the full correspondence on one cocycle class: c in Z^3_<= over an
// F-inverse monoid; builds the extension of a strong normalization of c,
// extracts c' through the F-inverse transversals, finds the order-preserving
// cohomology witness, and round-trips the extension side
RoundTripReport theorem_harness(const TModule& M, const Cochain& c,
                                const SampleConfig& cfg);

}  // namespace isgcoh
