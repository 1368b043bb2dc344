#pragma once

#include "isgcoh/tmodule.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace isgcoh {

using Rng = std::mt19937_64;

struct SampleConfig {
  std::uint64_t seed = 20260826;
  int samples = 10000;   // sampled identity checks per law
  int pool = 40;         // pool size per slot in quantified laws
  int max_word_len = 3;
  bool checked = true;   // recompute recursive forms and compare
  long long budget = 1 << 20;
};

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& why)
      : std::runtime_error(why) {}
};

// set-with-operations over an element type; enumerate is null for the
// symbolic (infinite) carriers
template <class E>
struct Carrier {
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> inv;
  std::function<bool(const E&, const E&)> eq;
  std::function<std::string(const E&)> render;
  std::function<E(Rng&)> sample;
  std::function<std::vector<E>()> enumerate;

  bool is_idem(const E& x) const { return eq(mul(x, x), x); }
  // natural partial order via idempotent left multipliers
  bool leq(const E& x, const E& y) const {
    return eq(x, mul(mul(x, inv(x)), y));
  }
};

template <class E>
std::vector<E> test_pool(const Carrier<E>& c, Rng& rng, int k) {
  if (c.enumerate) return c.enumerate();
  std::vector<E> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(c.sample(rng));
  return out;
}

// A --i--> N --beta--> S --pi--> T with action lambda of S on N
template <class SE, class NE>
struct Extension {
  const TModule* M = nullptr;
  Carrier<SE> S;
  Carrier<NE> N;
  std::function<NE(int)> i;
  std::function<std::optional<int>(const NE&)> i_inv;
  std::function<SE(const NE&)> beta;
  std::function<int(const SE&)> pi;
  std::function<NE(const SE&)> alpha;  // E(S) -> E(N), inverse of beta there
  std::function<NE(const SE&, const NE&)> lambda;
  std::function<std::vector<SE>()> idempotents_S;
  std::function<bool(const SE&)> in_beta_N;
  std::function<SE(int, Rng&)> preimage;  // random s with pi(s) = t
};

namespace detail {
inline void record(std::vector<Violation>& out, const std::string& axiom,
                   std::vector<std::string> witness, int cap = 5) {
  int seen = 0;
  for (const auto& v : out)
    if (v.axiom == axiom) ++seen;
  if (seen < cap) out.push_back({axiom, std::move(witness)});
}
}  // namespace detail

// CM1: lambda_e(n) = alpha(e) n              (e in E(S))
// CM2: lambda_s(alpha(e)) = alpha(s e s^-1)
// CM3: lambda_{beta(n)}(n') = n n' n^-1
// CM4: beta(lambda_s(n)) = s beta(n) s^-1
// plus: each lambda_s is an endomorphism and lambda is a homomorphism
template <class SE, class NE>
std::vector<Violation> check_crossed_module(const Extension<SE, NE>& X,
                                            const SampleConfig& cfg) {
  std::vector<Violation> out;
  Rng rng(cfg.seed);
  auto Sp = test_pool(X.S, rng, cfg.pool);
  auto Np = test_pool(X.N, rng, cfg.pool);
  auto ES = X.idempotents_S();

  for (const auto& e : ES)
    for (const auto& n : Np)
      if (!X.N.eq(X.lambda(e, n), X.N.mul(X.alpha(e), n)))
        detail::record(out, "CM1", {X.S.render(e), X.N.render(n)});
  for (const auto& s : Sp)
    for (const auto& e : ES) {
      SE conj = X.S.mul(X.S.mul(s, e), X.S.inv(s));
      if (!X.N.eq(X.lambda(s, X.alpha(e)), X.alpha(conj)))
        detail::record(out, "CM2", {X.S.render(s), X.S.render(e)});
    }
  for (const auto& n : Np)
    for (const auto& m : Np)
      if (!X.N.eq(X.lambda(X.beta(n), m),
                  X.N.mul(X.N.mul(n, m), X.N.inv(n))))
        detail::record(out, "CM3", {X.N.render(n), X.N.render(m)});
  for (const auto& s : Sp)
    for (const auto& n : Np)
      if (!X.S.eq(X.beta(X.lambda(s, n)),
                  X.S.mul(X.S.mul(s, X.beta(n)), X.S.inv(s))))
        detail::record(out, "CM4", {X.S.render(s), X.N.render(n)});
  for (const auto& s : Sp)
    for (const auto& n : Np)
      for (const auto& m : Np)
        if (!X.N.eq(X.lambda(s, X.N.mul(n, m)),
                    X.N.mul(X.lambda(s, n), X.lambda(s, m))))
          detail::record(out, "lambda-endomorphism",
                         {X.S.render(s), X.N.render(n), X.N.render(m)});
  for (const auto& s : Sp)
    for (const auto& p : Sp)
      for (const auto& n : Np)
        if (!X.N.eq(X.lambda(X.S.mul(s, p), n), X.lambda(s, X.lambda(p, n))))
          detail::record(out, "lambda-homomorphism",
                         {X.S.render(s), X.S.render(p), X.N.render(n)});
  return out;
}

// CME: i injective homomorphism, beta idempotent-separating homomorphism
// with alpha inverse to beta on E(N), pi idempotent-separating surjection,
// exactness i(A) = beta^{-1}(E(S)) and beta(N) = pi^{-1}(E(T))
template <class SE, class NE>
std::vector<Violation> check_extension(const Extension<SE, NE>& X,
                                       const SampleConfig& cfg) {
  std::vector<Violation> out = check_crossed_module(X, cfg);
  Rng rng(cfg.seed + 1);
  auto Sp = test_pool(X.S, rng, cfg.pool);
  auto Np = test_pool(X.N, rng, cfg.pool);
  auto ES = X.idempotents_S();
  const auto& T = *X.M->T;
  const auto& A = X.M->A->sg;

  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (!X.N.eq(X.i(A.mul(a, b)), X.N.mul(X.i(a), X.i(b))))
        detail::record(out, "i-homomorphism", {A.name(a), A.name(b)});
  for (int a = 0; a < A.size(); ++a)
    for (int b = a + 1; b < A.size(); ++b)
      if (X.N.eq(X.i(a), X.i(b)))
        detail::record(out, "i-injective", {A.name(a), A.name(b)});
  for (int a = 0; a < A.size(); ++a) {
    auto back = X.i_inv(X.i(a));
    if (!back || *back != a)
      detail::record(out, "i-section", {A.name(a)});
  }
  for (const auto& n : Np)
    for (const auto& m : Np)
      if (!X.S.eq(X.beta(X.N.mul(n, m)), X.S.mul(X.beta(n), X.beta(m))))
        detail::record(out, "beta-homomorphism",
                       {X.N.render(n), X.N.render(m)});
  // beta restricted to E(N) is inverted by alpha
  for (const auto& e : ES) {
    if (!X.N.is_idem(X.alpha(e)))
      detail::record(out, "alpha-into-E(N)", {X.S.render(e)});
    if (!X.S.eq(X.beta(X.alpha(e)), e))
      detail::record(out, "beta-alpha-identity", {X.S.render(e)});
  }
  for (const auto& n : Np) {
    NE en = X.N.mul(n, X.N.inv(n));
    if (!X.N.eq(X.alpha(X.beta(en)), en))
      detail::record(out, "alpha-beta-identity", {X.N.render(en)});
  }
  for (const auto& s : Sp)
    for (const auto& t : Sp)
      if (X.pi(X.S.mul(s, t)) != T.mul(X.pi(s), X.pi(t)))
        detail::record(out, "pi-homomorphism",
                       {X.S.render(s), X.S.render(t)});
  for (size_t i = 0; i < ES.size(); ++i)
    for (size_t j = i + 1; j < ES.size(); ++j)
      if (X.pi(ES[i]) == X.pi(ES[j]) && !X.S.eq(ES[i], ES[j]))
        detail::record(out, "pi-idempotent-separating",
                       {X.S.render(ES[i]), X.S.render(ES[j])});
  for (int t = 0; t < T.size(); ++t) {
    SE s = X.preimage(t, rng);
    if (X.pi(s) != t) detail::record(out, "pi-surjective", {T.name(t)});
  }
  // exactness at N: i(A) = beta^{-1}(E(S))
  for (int a = 0; a < A.size(); ++a)
    if (!X.S.is_idem(X.beta(X.i(a))))
      detail::record(out, "exactness-i(A)-into-ker", {A.name(a)});
  for (const auto& n : Np)
    if (X.S.is_idem(X.beta(n)) && !X.i_inv(n))
      detail::record(out, "exactness-ker-into-i(A)", {X.N.render(n)});
  // exactness at S: beta(N) = pi^{-1}(E(T))
  for (const auto& n : Np)
    if (!T.idem(X.pi(X.beta(n))))
      detail::record(out, "exactness-beta(N)-over-E(T)", {X.N.render(n)});
  for (const auto& s : Sp)
    if (T.idem(X.pi(s)) != X.in_beta_N(s))
      detail::record(out, "exactness-pi-fiber-is-beta(N)", {X.S.render(s)});
  return out;
}

// theta = i^-1 . alpha . (pi|E(S))^-1, eta_t = i^-1 . lambda_s . i for any
// preimage s of t; independence of the choice is checked across draws
template <class SE, class NE>
std::pair<TModule, std::vector<Violation>> induced_tmodule(
    const Extension<SE, NE>& X, const SampleConfig& cfg) {
  std::vector<Violation> out;
  Rng rng(cfg.seed + 2);
  const auto& T = *X.M->T;
  const auto& A = X.M->A->sg;
  TModule M;
  M.T = X.M->T;
  M.A = X.M->A;
  M.theta.assign(T.size(), -1);
  auto ES = X.idempotents_S();
  for (int e : T.idempotents()) {
    std::optional<SE> es;
    for (const auto& s : ES)
      if (X.pi(s) == e) es = s;
    if (!es) {
      detail::record(out, "induced-theta-no-preimage", {T.name(e)});
      continue;
    }
    auto a = X.i_inv(X.alpha(*es));
    if (!a) {
      detail::record(out, "induced-theta-outside-i(A)", {T.name(e)});
      continue;
    }
    M.theta[e] = *a;
  }
  M.eta.assign(T.size(), std::vector<int>(A.size(), -1));
  const int tries = 4;
  for (int t = 0; t < T.size(); ++t) {
    for (int k = 0; k < tries; ++k) {
      SE s = X.preimage(t, rng);
      for (int a = 0; a < A.size(); ++a) {
        auto v = X.i_inv(X.lambda(s, X.i(a)));
        if (!v) {
          detail::record(out, "induced-eta-outside-i(A)",
                         {T.name(t), A.name(a)});
          continue;
        }
        if (M.eta[t][a] == -1)
          M.eta[t][a] = *v;
        else if (M.eta[t][a] != *v)
          detail::record(out, "induced-eta-preimage-dependent",
                         {T.name(t), A.name(a), X.S.render(s)});
      }
    }
  }
  return {std::move(M), std::move(out)};
}

template <class NE1, class SE1, class NE2, class SE2>
struct EquivalenceWitness {
  std::function<NE2(const NE1&)> phi1;
  std::function<SE2(const SE1&)> phi2;
};

// CMEE1: i' = phi1 . i, beta' . phi1 = phi2 . beta, pi' . phi2 = pi
// CMEE2: phi1 . lambda_s = lambda'_{phi2(s)} . phi1
template <class SE1, class NE1, class SE2, class NE2>
std::vector<Violation> check_equivalence_witness(
    const Extension<SE1, NE1>& X, const Extension<SE2, NE2>& Y,
    const EquivalenceWitness<NE1, SE1, NE2, SE2>& w, const SampleConfig& cfg) {
  std::vector<Violation> out;
  Rng rng(cfg.seed + 3);
  auto Sp = test_pool(X.S, rng, cfg.pool);
  auto Np = test_pool(X.N, rng, cfg.pool);
  const auto& A = X.M->A->sg;

  for (const auto& n : Np)
    for (const auto& m : Np)
      if (!Y.N.eq(w.phi1(X.N.mul(n, m)), Y.N.mul(w.phi1(n), w.phi1(m))))
        detail::record(out, "phi1-homomorphism",
                       {X.N.render(n), X.N.render(m)});
  for (const auto& s : Sp)
    for (const auto& t : Sp)
      if (!Y.S.eq(w.phi2(X.S.mul(s, t)), Y.S.mul(w.phi2(s), w.phi2(t))))
        detail::record(out, "phi2-homomorphism",
                       {X.S.render(s), X.S.render(t)});
  for (int a = 0; a < A.size(); ++a)
    if (!Y.N.eq(w.phi1(X.i(a)), Y.i(a)))
      detail::record(out, "CMEE1-i", {A.name(a)});
  for (const auto& n : Np)
    if (!Y.S.eq(Y.beta(w.phi1(n)), w.phi2(X.beta(n))))
      detail::record(out, "CMEE1-beta", {X.N.render(n)});
  for (const auto& s : Sp)
    if (Y.pi(w.phi2(s)) != X.pi(s))
      detail::record(out, "CMEE1-pi", {X.S.render(s)});
  for (const auto& s : Sp)
    for (const auto& n : Np)
      if (!Y.N.eq(w.phi1(X.lambda(s, n)), Y.lambda(w.phi2(s), w.phi1(n))))
        detail::record(out, "CMEE2", {X.S.render(s), X.N.render(n)});
  // implied square: phi1 . alpha = alpha' . phi2 on E(S)
  for (const auto& e : X.idempotents_S())
    if (!Y.N.eq(w.phi1(X.alpha(e)), Y.alpha(w.phi2(e))))
      detail::record(out, "alpha-square", {X.S.render(e)});
  return out;
}

// the identity-style extension A -> A -> T -> T attached to a T-module:
// S = T, pi = id, N = A, beta(a) = theta^-1(r(a)), lambda_t = eta_t
Extension<int, int> finite_module_extension(const TModule& M);

}  // namespace isgcoh
