#include "isgcoh/extraction.hpp"

namespace isgcoh {

Transversal<CoverElem, CoverN> canonical_cover_transversals(
    std::shared_ptr<CoverContext> ctx, bool f_inverse_mode) {
  Transversal<CoverElem, CoverN> tr;
  if (f_inverse_mode) {
    auto fi = is_f_inverse_monoid(*ctx->M().T);
    if (!fi.f_inverse)
      throw PreconditionFailed(
          "F-inverse transversal requested over a non-F-inverse monoid");
    tr.rho = [ctx, fi](int t) -> CoverElem {
      if (ctx->M().T->idem(t)) return {t, {}};
      return {t, {pos(fi.max_of_class[t])}};
    };
  } else {
    tr.rho = [ctx](int t) -> CoverElem { return {t, {pos(t)}}; };
  }
  tr.sigma = [ctx](const CoverElem& s) -> CoverN {
    if (!ctx->M().T->idem(s.t))
      throw PreconditionFailed("sigma applied outside beta(N)");
    return {ctx->M().theta[s.t], s.t, s.w};
  };
  return tr;
}

}  // namespace isgcoh
