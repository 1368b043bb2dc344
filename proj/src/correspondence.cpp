#include "isgcoh/correspondence.hpp"

namespace isgcoh {

TauOps<int> tau_ops_coefficients(const TModule& M, const Cochain& d) {
  if (d.degree != 2)
    throw PreconditionFailed("tau over coefficients needs a 2-cochain");
  TauOps<int> ops;
  ops.T = M.T;
  const auto& A = M.A->sg;
  ops.mul = [&A](const int& a, const int& b) { return A.mul(a, b); };
  ops.inv = [&A](const int& a) { return A.inv(a); };
  ops.base = [&M](int x) { return M.theta[M.T->r(x)]; };
  ops.d = [d](int x, int y) { return d.at({x, y}); };
  return ops;
}

CoverWitness equivalence_from_cohomologous(std::shared_ptr<CoverContext> from,
                                           std::shared_ptr<CoverContext> to,
                                           const Cochain& d) {
  if (!is_order_preserving(d) || !is_strongly_normalized(d))
    throw PreconditionFailed(
        "equivalence witness needs a strongly normalized order-preserving "
        "2-cochain");
  Cochain lhs = from->cocycle();
  Cochain rhs = cochain_mul(coboundary(d), to->cocycle());
  if (!(lhs.vals == rhs.vals))
    throw PreconditionFailed("2-cochain does not witness cohomology of the "
                             "two cocycles");
  auto ops = tau_ops_coefficients(from->M(), d);
  CoverWitness w;
  w.phi1 = [from, ops](const CoverN& n) -> CoverN {
    if (n.w.empty()) return n;
    return {from->M().A->mul(tau(ops, n.w), n.a), n.e, n.w};
  };
  w.phi2 = [](const CoverElem& s) { return s; };
  return w;
}

RoundTripReport theorem_harness(const TModule& M, const Cochain& c,
                                const SampleConfig& cfg) {
  RoundTripReport rep;
  rep.add("input-in-Z3-le",
          c.degree == 3 && is_valid_cochain(c) && is_cocycle(c) &&
              is_order_preserving(c),
          "input is not an order-preserving 3-cocycle");
  auto fi = is_f_inverse_monoid(*M.T);
  rep.add("f-inverse-monoid", fi.f_inverse, "T is not an F-inverse monoid");
  if (!rep.ok) return rep;

  auto [cn, dn] = normalize_cocycle(c);
  rep.add("strong-normalization",
          is_strongly_normalized(cn) &&
              cochain_mul(c, coboundary(dn)) == cn && is_order_preserving(dn),
          "normalization did not produce a strongly normalized cocycle");
  if (!rep.ok) return rep;

  auto ctx = build_extension_from_cocycle(M, cn, cfg);
  auto X = cover_extension(ctx);
  auto tr = canonical_cover_transversals(ctx, true);

  Cochain cp = extract_cocycle(X, tr);
  cp.M = &M;  // the cover context owning X.M does not outlive this call
  rep.extracted = cp;
  rep.add("extracted-in-Z3-le-strongly-normalized",
          is_cocycle(cp) && is_order_preserving(cp) &&
              is_strongly_normalized(cp),
          "extracted cocycle is not strongly normalized order-preserving");

  auto d = cohomologous_witness(c, cp, cfg.budget);
  rep.add("cohomologous-to-input-in-Z3-le", d.has_value(),
          "no order-preserving 2-cochain links the extracted cocycle to the "
          "input");

  auto sub = roundtrip_extension(X, tr, cfg);
  for (auto& st : sub.stages) {
    st.name = "roundtrip/" + st.name;
    rep.ok = rep.ok && st.ok;
    rep.stages.push_back(std::move(st));
  }
  return rep;
}

}  // namespace isgcoh
