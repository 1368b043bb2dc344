#include "isgcoh/cover.hpp"

#include <algorithm>

namespace isgcoh {

CoverContext::CoverContext(const TModule& M, Cochain c, SampleConfig cfg)
    : M_(M), c_(std::move(c)), cfg_(cfg) {
  c_.M = &M_;
  if (c_.degree != 3)
    throw PreconditionFailed("cover construction needs a 3-cochain");
  if (!is_valid_cochain(c_) || !is_cocycle(c_))
    throw PreconditionFailed("cover construction needs a 3-cocycle");
  if (!is_order_preserving(c_) || !is_normalized(c_))
    throw PreconditionFailed(
        "cover construction needs a strongly normalized order-preserving "
        "3-cocycle");
}

int CoverContext::xi(int t, const Word& w) const {
  if (w.empty()) throw PreconditionFailed("xi of the empty word");
  auto key = std::make_pair(t, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto& T = *M_.T;
  const auto& A = M_.A->sg;
  int res;
  if (w[0].sign < 0) {
    // xi_t([x]^-1 u) = c(t, x^-1, x)^-1 xi_t([x^-1] u)
    int x = w[0].base;
    Word rest = w;
    rest[0] = pos(T.inv(x));
    res = A.mul(A.inv(c_.at({t, T.inv(x), x})), xi(t, rest));
  } else if (w.size() == 1) {
    // xi_t([x]) = theta(r(t x))
    res = M_.theta[T.r(T.mul(t, w[0].base))];
  } else if (w[1].sign > 0) {
    // xi_t([x][y] v) = c(t, x, y) xi_t([xy] v)
    int x = w[0].base, y = w[1].base;
    Word rest(w.begin() + 1, w.end());
    rest[0] = pos(T.mul(x, y));
    res = A.mul(c_.at({t, x, y}), xi(t, rest));
  } else {
    // xi_t([x][y]^-1 v) = c(t, x y^-1, y)^-1 xi_t([x y^-1] v)
    int x = w[0].base, y = w[1].base;
    int xy1 = T.mul(x, T.inv(y));
    Word rest(w.begin() + 1, w.end());
    rest[0] = pos(xy1);
    res = A.mul(A.inv(c_.at({t, xy1, y})), xi(t, rest));
  }
  memo_[key] = res;
  return res;
}

int CoverContext::zeta(int t, const Word& w) const {
  Word r = reduce(w);
  if (r.empty()) return M_.theta[M_.T->r(t)];
  return xi(t, r);
}

bool CoverContext::valid_s(const CoverElem& s) const {
  return is_reduced(s.w) && cover_member(s.t, s.w, *M_.T);
}

bool CoverContext::valid_n(const CoverN& n) const {
  const auto& T = *M_.T;
  return is_reduced(n.w) && T.idem(n.e) && cover_member(n.e, n.w, T) &&
         M_.A->comp(n.a) == M_.theta[n.e];
}

CoverElem CoverContext::s_mul(const CoverElem& x, const CoverElem& y) const {
  return {M_.T->mul(x.t, y.t), reduce(concat(x.w, y.w))};
}

CoverElem CoverContext::s_inv(const CoverElem& x) const {
  return {M_.T->inv(x.t), involution(x.w)};
}

CoverN CoverContext::n_mul(const CoverN& x, const CoverN& y) const {
  return {M_.A->mul(x.a, y.a), M_.T->mul(x.e, y.e),
          reduce(concat(x.w, y.w))};
}

CoverN CoverContext::n_inv(const CoverN& x) const {
  return {M_.A->inv(x.a), x.e, involution(x.w)};
}

CoverN CoverContext::i(int a) const {
  return {a, M_.theta_inv(M_.A->comp(a)), {}};
}

std::optional<int> CoverContext::i_inv(const CoverN& n) const {
  if (!n.w.empty()) return std::nullopt;
  return n.a;
}

CoverElem CoverContext::beta(const CoverN& n) const { return {n.e, n.w}; }

CoverN CoverContext::alpha(const CoverElem& e) const {
  if (!e.w.empty() || !M_.T->idem(e.t))
    throw PreconditionFailed("alpha applied off E(S)");
  return {M_.theta[e.t], e.t, {}};
}

CoverN CoverContext::gamma(int t, int eps, const CoverN& n) const {
  const auto& T = *M_.T;
  const auto& A = M_.A->sg;
  int u = eps > 0 ? t : T.inv(t);
  Word conj = reduce(concat(concat(Word{Letter{t, eps}}, n.w),
                            Word{Letter{t, -eps}}));
  return {A.mul(zeta(u, n.w), M_.eta[u][n.a]),
          T.mul(T.mul(u, n.e), T.inv(u)), conj};
}

CoverN CoverContext::lambda_closed(const CoverElem& s, const CoverN& n) const {
  const auto& T = *M_.T;
  const auto& A = M_.A->sg;
  if (s.w.empty()) {
    if (!T.idem(s.t))
      throw PreconditionFailed("cover element (t, empty) with t not idempotent");
    return n_mul(alpha(s), n);
  }
  Word conj = reduce(concat(concat(s.w, n.w), involution(s.w)));
  return {A.mul(zeta(s.t, n.w), M_.eta[s.t][n.a]),
          T.mul(T.mul(s.t, n.e), T.inv(s.t)), conj};
}

CoverN CoverContext::lambda_recursive(const CoverElem& s,
                                      const CoverN& n) const {
  const auto& T = *M_.T;
  if (s.w.empty()) {
    if (!T.idem(s.t))
      throw PreconditionFailed("cover element (t, empty) with t not idempotent");
    return n_mul(alpha(s), n);
  }
  CoverN acc = n;
  for (auto it = s.w.rbegin(); it != s.w.rend(); ++it)
    acc = gamma(it->base, it->sign, acc);
  CoverElem rs = s_mul(s, s_inv(s));
  return n_mul(alpha(rs), acc);
}

CoverN CoverContext::lambda(const CoverElem& s, const CoverN& n) const {
  CoverN closed = lambda_closed(s, n);
  if (cfg_.checked) {
    CoverN rec = lambda_recursive(s, n);
    if (!(rec == closed))
      throw std::logic_error("lambda: recursive and closed forms disagree at " +
                             render_s(s) + " acting on " + render_n(n));
  }
  return closed;
}

std::string CoverContext::render_s(const CoverElem& s) const {
  return "(" + M_.T->name(s.t) + "; " + format_word(s.w, *M_.T) + ")";
}

std::string CoverContext::render_n(const CoverN& n) const {
  return "(" + M_.A->sg.name(n.a) + ", " + M_.T->name(n.e) + "; " +
         format_word(n.w, *M_.T) + ")";
}

Word CoverContext::random_reduced_word(Rng& rng) const {
  std::uniform_int_distribution<int> len(0, cfg_.max_word_len);
  std::uniform_int_distribution<int> base(0, M_.T->size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(len(rng));
  for (auto& l : w) l = Letter{base(rng), sign(rng) ? +1 : -1};
  return reduce(w);
}

CoverElem CoverContext::sample_s(Rng& rng) const {
  const auto& T = *M_.T;
  Word w = random_reduced_word(rng);
  int v = nu(w, T);
  std::vector<int> below;
  for (int t = 0; t < T.size(); ++t)
    if (leq_t1(t, v, T)) below.push_back(t);
  std::uniform_int_distribution<size_t> pick(0, below.size() - 1);
  return {below[pick(rng)], w};
}

CoverN CoverContext::sample_n(Rng& rng) const {
  const auto& T = *M_.T;
  Word w;
  std::vector<int> below;
  while (below.empty()) {  // some words have no idempotent below nu(w)
    w = random_reduced_word(rng);
    int v = nu(w, T);
    for (int e : T.idempotents())
      if (leq_t1(e, v, T)) below.push_back(e);
  }
  std::uniform_int_distribution<size_t> pick(0, below.size() - 1);
  int e = below[pick(rng)];
  auto elems = M_.A->component_elems(M_.theta[e]);
  std::uniform_int_distribution<size_t> pa(0, elems.size() - 1);
  return {elems[pa(rng)], e, w};
}

CoverElem CoverContext::preimage(int t, Rng& rng) const {
  const auto& T = *M_.T;
  std::vector<Word> cands{{pos(t)}};
  for (int x = 0; x < T.size(); ++x)
    for (int y = 0; y < T.size(); ++y)
      for (int sx : {+1, -1})
        for (int sy : {+1, -1}) {
          Word w = reduce({Letter{x, sx}, Letter{y, sy}});
          if (cover_member(t, w, T)) cands.push_back(w);
        }
  std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
  return {t, cands[pick(rng)]};
}

Extension<CoverElem, CoverN> cover_extension(
    std::shared_ptr<CoverContext> ctx) {
  Extension<CoverElem, CoverN> X;
  X.M = &ctx->M();
  X.S.mul = [ctx](const CoverElem& a, const CoverElem& b) {
    return ctx->s_mul(a, b);
  };
  X.S.inv = [ctx](const CoverElem& a) { return ctx->s_inv(a); };
  X.S.eq = [](const CoverElem& a, const CoverElem& b) { return a == b; };
  X.S.render = [ctx](const CoverElem& a) { return ctx->render_s(a); };
  X.S.sample = [ctx](Rng& rng) { return ctx->sample_s(rng); };
  X.N.mul = [ctx](const CoverN& a, const CoverN& b) {
    return ctx->n_mul(a, b);
  };
  X.N.inv = [ctx](const CoverN& a) { return ctx->n_inv(a); };
  X.N.eq = [](const CoverN& a, const CoverN& b) { return a == b; };
  X.N.render = [ctx](const CoverN& a) { return ctx->render_n(a); };
  X.N.sample = [ctx](Rng& rng) { return ctx->sample_n(rng); };
  X.i = [ctx](int a) { return ctx->i(a); };
  X.i_inv = [ctx](const CoverN& n) { return ctx->i_inv(n); };
  X.beta = [ctx](const CoverN& n) { return ctx->beta(n); };
  X.pi = [ctx](const CoverElem& s) { return ctx->pi(s); };
  X.alpha = [ctx](const CoverElem& e) { return ctx->alpha(e); };
  X.lambda = [ctx](const CoverElem& s, const CoverN& n) {
    return ctx->lambda(s, n);
  };
  X.idempotents_S = [ctx]() {
    std::vector<CoverElem> out;
    for (int e : ctx->M().T->idempotents()) out.push_back({e, {}});
    return out;
  };
  X.in_beta_N = [ctx](const CoverElem& s) { return ctx->M().T->idem(s.t); };
  X.preimage = [ctx](int t, Rng& rng) { return ctx->preimage(t, rng); };
  return X;
}

std::shared_ptr<CoverContext> build_extension_from_cocycle(
    const TModule& M, const Cochain& c, const SampleConfig& cfg) {
  return std::make_shared<CoverContext>(M, c, cfg);
}

}  // namespace isgcoh
