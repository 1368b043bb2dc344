#pragma once

#include "isgcoh/cover.hpp"
#include "isgcoh/crossed.hpp"

namespace isgcoh {

template <class SE, class NE>
struct Transversal {
  std::function<SE(int)> rho;          // section of pi
  std::function<NE(const SE&)> sigma;  // section of beta on beta(N)
};

// transversal sanity: sections, order preservation, idempotent respect
template <class SE, class NE>
std::vector<Violation> check_admissible(const Extension<SE, NE>& X,
                                        const Transversal<SE, NE>& tr,
                                        const SampleConfig& cfg) {
  std::vector<Violation> out;
  const auto& T = *X.M->T;
  for (int t = 0; t < T.size(); ++t)
    if (X.pi(tr.rho(t)) != t)
      detail::record(out, "rho-section", {T.name(t)});
  for (int e : T.idempotents())
    if (!X.S.is_idem(tr.rho(e)))
      detail::record(out, "rho-respects-idempotents", {T.name(e)});
  for (int x = 0; x < T.size(); ++x)
    for (int y = 0; y < T.size(); ++y)
      if (T.leq(x, y) && !X.S.leq(tr.rho(x), tr.rho(y)))
        detail::record(out, "rho-order-preserving", {T.name(x), T.name(y)});
  // probe sigma on beta-images of rho-derived kernel elements
  std::vector<SE> probes;
  for (int x = 0; x < T.size(); ++x)
    for (int y = 0; y < T.size(); ++y)
      probes.push_back(X.S.mul(X.S.mul(tr.rho(x), tr.rho(y)),
                               X.S.inv(tr.rho(T.mul(x, y)))));
  for (const auto& e : X.idempotents_S()) probes.push_back(e);
  for (const auto& k : probes) {
    if (!X.in_beta_N(k)) {
      detail::record(out, "factor-set-in-beta(N)", {X.S.render(k)});
      continue;
    }
    if (!X.S.eq(X.beta(tr.sigma(k)), k))
      detail::record(out, "sigma-section", {X.S.render(k)});
  }
  for (const auto& e : X.idempotents_S())
    if (!X.N.eq(tr.sigma(e), X.alpha(e)))
      detail::record(out, "sigma-respects-idempotents", {X.S.render(e)});
  for (size_t i = 0; i < probes.size(); ++i)
    for (size_t j = 0; j < probes.size(); ++j)
      if (X.in_beta_N(probes[i]) && X.in_beta_N(probes[j]) &&
          X.S.leq(probes[i], probes[j]) &&
          !X.N.leq(tr.sigma(probes[i]), tr.sigma(probes[j])))
        detail::record(out, "sigma-order-preserving",
                       {X.S.render(probes[i]), X.S.render(probes[j])});
  return out;
}

// f(x,y) = rho(x) rho(y) rho(xy)^-1, a factor set with values in beta(N)
template <class SE, class NE>
std::vector<std::vector<SE>> derive_factor_set(const Extension<SE, NE>& X,
                                               const Transversal<SE, NE>& tr) {
  const auto& T = *X.M->T;
  std::vector<std::vector<SE>> f(T.size());
  for (int x = 0; x < T.size(); ++x) {
    f[x].reserve(T.size());
    for (int y = 0; y < T.size(); ++y) {
      SE v = X.S.mul(X.S.mul(tr.rho(x), tr.rho(y)),
                     X.S.inv(tr.rho(T.mul(x, y))));
      if (!X.in_beta_N(v))
        throw PreconditionFailed("factor set leaves beta(N) at (" +
                                 T.name(x) + ", " + T.name(y) + ")");
      // rho(x) rho(y) = f(x,y) rho(xy) must hold for a genuine section
      if (!X.S.eq(X.S.mul(tr.rho(x), tr.rho(y)),
                  X.S.mul(v, tr.rho(T.mul(x, y)))))
        throw PreconditionFailed("factor set does not rewrite the product at (" +
                                 T.name(x) + ", " + T.name(y) + ")");
      f[x].push_back(std::move(v));
    }
  }
  return f;
}

// F = sigma . f, lifted to N
template <class SE, class NE>
std::vector<std::vector<NE>> lift_factor_set(
    const Extension<SE, NE>& X, const Transversal<SE, NE>& tr,
    const std::vector<std::vector<SE>>& f) {
  std::vector<std::vector<NE>> F(f.size());
  for (size_t x = 0; x < f.size(); ++x)
    for (size_t y = 0; y < f.size(); ++y)
      F[x].push_back(tr.sigma(f[x][y]));
  return F;
}

// the 3-cocycle c with
//   lambda_{rho(x)}(F(y,z)) F(x,yz) = i(c(x,y,z)) F(x,y) F(xy,z);
// c(x,y,z) is resolved inside the component over theta(r(xyz)) of the
// declared module
template <class SE, class NE>
Cochain extract_cocycle(const Extension<SE, NE>& X,
                        const Transversal<SE, NE>& tr) {
  const auto& T = *X.M->T;
  const auto& A = X.M->A->sg;
  auto f = derive_factor_set(X, tr);
  auto F = lift_factor_set(X, tr, f);
  Cochain c = trivial_cochain(*X.M, 3);
  for (int x = 0; x < T.size(); ++x)
    for (int y = 0; y < T.size(); ++y)
      for (int z = 0; z < T.size(); ++z) {
        NE L = X.N.mul(X.lambda(tr.rho(x), F[y][z]), F[x][T.mul(y, z)]);
        NE R = X.N.mul(F[x][y], F[T.mul(x, y)][z]);
        int comp = c.vals[c.index({x, y, z})];  // component identity
        std::optional<int> val;
        for (int a : X.M->A->component_elems(A.r(comp)))
          if (X.N.eq(L, X.N.mul(X.i(a), R))) {
            if (val)
              throw PreconditionFailed("cocycle value not unique at (" +
                                       T.name(x) + "," + T.name(y) + "," +
                                       T.name(z) + ")");
            val = a;
          }
        if (!val)
          throw PreconditionFailed("no cocycle value in the component at (" +
                                   T.name(x) + "," + T.name(y) + "," +
                                   T.name(z) + ")");
        c.vals[c.index({x, y, z})] = *val;
      }
  return c;
}

// canonical transversals of the cover extension:
//   plain mode       rho(t) = (t, [t])
//   F-inverse mode   rho(t) = (t, [max t]) off E(T), (t, empty) on E(T)
// and sigma(e, w) = (theta(e), e, w) in both modes
Transversal<CoverElem, CoverN> canonical_cover_transversals(
    std::shared_ptr<CoverContext> ctx, bool f_inverse_mode);

}  // namespace isgcoh
