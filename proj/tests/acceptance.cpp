// Acceptance gate: ten oracle- and property-based criteria at desk scale,
// one pass/fail line each, all equalities exact.  argv[1] = CLI binary,
// argv[2] = data directory with the JSON fixtures.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isgcoh/correspondence.hpp"
#include "isgcoh/extraction.hpp"
#include "isgcoh/fixtures.hpp"

using namespace isgcoh;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int idx, const std::string& name, bool ok, double secs,
            double limit) {
  bool pass = ok && secs < limit;
  if (!pass) ++failures;
  std::printf("%s  %2d. %s (%.2fs)%s\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), secs,
              ok ? "" : "  [property violated]");
}

using BundleFn = fixtures::ModuleBundle (*)();
std::vector<fixtures::ModuleBundle> bundles(
    std::initializer_list<BundleFn> fns) {
  std::vector<fixtures::ModuleBundle> out;
  for (auto fn : fns) out.push_back(fn());
  return out;
}

constexpr long long kBudget = 1 << 22;

SampleConfig config() {
  SampleConfig cfg;
  cfg.pool = 25;
  return cfg;
}

std::vector<Cochain> strongly_normalized_reps(const TModule& M) {
  std::vector<Cochain> out;
  for (const auto& rep : cohomology(M, 3, true, kBudget).reps) {
    auto [cn, d] = normalize_cocycle(rep);
    out.push_back(cn);
  }
  return out;
}

std::string run_cli(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  out += "\nexit=" + std::to_string(rc);
  return out;
}

// 1. the coboundary squares to the trivial cochain in degrees 1 and 2
bool crit_complex() {
  bool ok = true;
  for (auto& b :
       bundles({fixtures::z2_module, fixtures::chain2_module})) {
    for (int n : {1, 2})
      for_each_cochain(b.M, n, false, kBudget, [&](const Cochain& f) {
        ok = ok && is_trivial(coboundary(coboundary(f)));
      });
  }
  return ok;
}

// 2. |H^3| matches the exhaustive-enumeration oracle
bool crit_cohomology_oracle() {
  auto z2 = fixtures::z2_module();
  auto ch = fixtures::chain2_module();
  return cohomology(z2.M, 3, false, kBudget).h_order == 2 &&
         cohomology(ch.M, 3, false, kBudget).h_order == 1;
}

// 3. normalization of order-preserving cocycles, and the equivalence
//    strongly normalized <=> normalized and order-preserving
bool crit_normalization() {
  bool ok = true;
  for (auto& b :
       bundles({fixtures::z2_module, fixtures::clifford4_module})) {
    for_each_cochain(b.M, 3, true, kBudget, [&](const Cochain& c) {
      if (!is_cocycle(c)) return;
      auto [cn, d] = normalize_cocycle(c);
      ok = ok && is_normalized(cn) && is_order_preserving(cn) &&
           cochain_mul(c, coboundary(d)) == cn;
    });
    for_each_cochain(b.M, 3, false, kBudget, [&](const Cochain& c) {
      if (!is_cocycle(c)) return;
      if (is_strongly_normalized(c))
        ok = ok && is_normalized(c) && is_order_preserving(c);
      if (is_normalized(c) && is_order_preserving(c))
        ok = ok && is_strongly_normalized(c);
    });
  }
  return ok;
}

// 4. cover shape: E(S) = E(T) x {empty}, E-unitarity, pi an
//    idempotent-separating epimorphism
bool crit_cover_laws() {
  bool ok = true;
  for (auto& b : bundles({fixtures::z2_module, fixtures::chain2_module,
                          fixtures::clifford4_module})) {
    auto ctx =
        build_extension_from_cocycle(b.M, trivial_cochain(b.M, 3), config());
    const auto& T = *b.T;
    Rng rng(101);
    std::vector<bool> hit(T.size(), false);
    for (int k = 0; k < 10000; ++k) {
      CoverElem x = ctx->sample_s(rng);
      CoverElem xi = ctx->s_inv(x);
      CoverElem r = ctx->s_mul(x, xi);
      ok = ok && r.w.empty() && T.idem(r.t);
      if (ctx->s_mul(x, x) == x) ok = ok && x.w.empty() && T.idem(x.t);
      auto leq = [&](const CoverElem& a, const CoverElem& c) {
        return ctx->s_mul(ctx->s_mul(a, ctx->s_inv(a)), c) == a;
      };
      for (int f : T.idempotents())
        if (leq({f, {}}, x)) ok = ok && ctx->s_mul(x, x) == x;
      hit[x.t] = true;
    }
    // pi is onto and separates idempotents (E(S) ~ E(T) bijectively)
    for (int t = 0; t < T.size(); ++t) ok = ok && hit[t];
    for (int e : T.idempotents())
      for (int f : T.idempotents())
        if (e != f) ok = ok && !(CoverElem{e, {}} == CoverElem{f, {}});
    // pi homomorphism on samples
    Rng rng2(102);
    for (int k = 0; k < 3000; ++k) {
      CoverElem x = ctx->sample_s(rng2), y = ctx->sample_s(rng2);
      ok = ok && ctx->pi(ctx->s_mul(x, y)) == T.mul(x.t, y.t);
    }
  }
  return ok;
}

// 5. the sampled xi/zeta/gamma/lambda identity suite
bool crit_action_identities() {
  bool ok = true;
  std::vector<fixtures::ModuleBundle> bs =
      bundles({fixtures::z2_module, fixtures::clifford4_module});
  for (auto& b : bs) {
    Cochain c = trivial_cochain(b.M, 3);
    c.set({1, 1, 1}, 1);
    auto ctx = build_extension_from_cocycle(b.M, c, config());
    const auto& T = *b.T;
    const auto& A = b.M.A->sg;
    Rng rng(7);
    for (int k = 0; k < 10000; ++k) {
      Word w = ctx->random_reduced_word(rng);
      if (w.empty()) continue;
      for (int t = 0; t < T.size(); ++t) {
        // component law
        ok = ok && b.M.A->comp(ctx->xi(t, w)) ==
                       b.M.theta[T.r(T.mul(t, phi(w, *b.T)))];
        // cancellation
        for (int e : T.idempotents()) {
          if (!T.leq(e, phi(w, T))) continue;
          int te = b.M.theta[T.r(T.mul(t, e))];
          ok = ok && A.mul(A.mul(te, ctx->xi(t, w)),
                           ctx->xi(t, involution(w))) == te;
        }
      }
      // concatenation
      Word v = ctx->random_reduced_word(rng);
      if (!v.empty() && is_reduced(concat(w, v)))
        for (int t = 0; t < T.size(); ++t)
          ok = ok && ctx->xi(t, concat(w, v)) ==
                         A.mul(ctx->xi(t, w),
                               ctx->xi(t, concat(Word{pos(phi(w, T))}, v)));
      // idempotent absorption
      for (int e : T.idempotents()) {
        Word ev = concat(Word{pos(e)}, w);
        if (!is_reduced(ev)) continue;
        for (int t = 0; t < T.size(); ++t)
          ok = ok && ctx->xi(t, ev) ==
                         A.mul(b.M.theta[T.r(T.mul(t, e))], ctx->xi(t, w));
      }
      // composition: theta(e) zeta_t(w) = zeta_{et}(w)
      for (int e : T.idempotents())
        for (int t = 0; t < T.size(); ++t)
          ok = ok && A.mul(b.M.theta[e], ctx->zeta(t, w)) ==
                         ctx->zeta(T.mul(e, t), w);
      // gamma endomorphism and relative invertibility
      CoverN n = ctx->sample_n(rng), m = ctx->sample_n(rng);
      for (int t = 0; t < T.size(); ++t) {
        ok = ok && ctx->gamma(t, +1, ctx->n_mul(n, m)) ==
                       ctx->n_mul(ctx->gamma(t, +1, n), ctx->gamma(t, +1, m));
        ok = ok && ctx->gamma(t, +1, ctx->gamma(t, -1, n)) ==
                       ctx->n_mul(ctx->alpha({T.r(t), {}}), n);
        ok = ok && ctx->gamma(t, -1, ctx->gamma(t, +1, n)) ==
                       ctx->n_mul(ctx->alpha({T.d(t), {}}), n);
      }
      // recursive lambda agrees with the closed form
      CoverElem x = ctx->sample_s(rng);
      ok = ok && ctx->lambda_recursive(x, n) == ctx->lambda_closed(x, n);
    }
  }
  return ok;
}

// 6. crossed module and extension axioms on every strongly normalized
//    representative; the induced module is the declared one
bool crit_extension_axioms() {
  bool ok = true;
  for (auto& b : bundles({fixtures::z2_module, fixtures::chain2_module,
                          fixtures::clifford4_module})) {
    for (const auto& c : strongly_normalized_reps(b.M)) {
      auto ctx = build_extension_from_cocycle(b.M, c, config());
      auto X = cover_extension(ctx);
      ok = ok && check_crossed_module(X, config()).empty();
      ok = ok && check_extension(X, config()).empty();
      auto [Mi, v] = induced_tmodule(X, config());
      ok = ok && v.empty() && Mi.eta == b.M.eta;
      for (int e : b.T->idempotents())
        ok = ok && Mi.theta[e] == b.M.theta[e];
    }
  }
  return ok;
}

// 7. plain transversal round trip returns the cocycle entrywise
bool crit_exact_roundtrip() {
  bool ok = true;
  for (auto& b : bundles({fixtures::z2_module, fixtures::chain2_module,
                          fixtures::clifford4_module})) {
    for (const auto& c : strongly_normalized_reps(b.M)) {
      auto ctx = build_extension_from_cocycle(b.M, c, config());
      auto X = cover_extension(ctx);
      auto tr = canonical_cover_transversals(ctx, false);
      ok = ok && extract_cocycle(X, tr).vals == c.vals;
    }
  }
  return ok;
}

// 8. theorem harness on every order-preserving class; classes stay distinct
bool crit_theorem_harness() {
  bool ok = true;
  for (auto& b :
       bundles({fixtures::z2_module, fixtures::clifford4_module})) {
    auto res = cohomology(b.M, 3, true, kBudget);
    std::vector<Cochain> extracted;
    for (const auto& rep : res.reps) {
      auto r = theorem_harness(b.M, rep, config());
      ok = ok && r.ok && r.extracted.has_value();
      if (r.extracted) extracted.push_back(*r.extracted);
    }
    for (size_t i = 0; i < extracted.size(); ++i)
      for (size_t j = i + 1; j < extracted.size(); ++j)
        ok = ok &&
             !cohomologous_witness(extracted[i], extracted[j], kBudget)
                  .has_value();
  }
  return ok;
}

// 9. equivalence witnesses pass the full diagram checks
bool crit_equivalence_witnesses() {
  bool ok = true;
  auto b = fixtures::z2_module();
  Cochain c = trivial_cochain(b.M, 3);
  c.set({1, 1, 1}, 1);
  bool linked_one = false;
  for_each_cochain(b.M, 2, true, kBudget, [&](const Cochain& d) {
    if (linked_one || !is_strongly_normalized(d) || is_trivial(d)) return;
    Cochain cp = cochain_mul(cochain_inv(coboundary(d)), c);
    if (!is_normalized(cp) || !is_order_preserving(cp)) return;
    auto from = build_extension_from_cocycle(b.M, c, config());
    auto to = build_extension_from_cocycle(b.M, cp, config());
    auto w = equivalence_from_cohomologous(from, to, d);
    ok = ok && check_equivalence_witness(cover_extension(from),
                                         cover_extension(to), w, config())
                   .empty();
    linked_one = true;
  });
  ok = ok && linked_one;
  // the roundtrip_extension witness stage on both fixtures
  for (auto& bb :
       bundles({fixtures::z2_module, fixtures::clifford4_module})) {
    Cochain cc = trivial_cochain(bb.M, 3);
    cc.set({1, 1, 1}, 1);
    auto ctx = build_extension_from_cocycle(bb.M, cc, config());
    auto rep = roundtrip_extension(cover_extension(ctx),
                                   canonical_cover_transversals(ctx, true),
                                   config());
    ok = ok && rep.ok;
  }
  return ok;
}

// 10. the CLI roundtrip report is byte-identical across runs
bool crit_determinism(const std::string& cli, const std::string& data) {
  std::string cmd = "'" + cli + "' roundtrip --semigroup '" + data +
                    "/z2_semigroup.json' --module '" + data +
                    "/z2_module.json' --cochain '" + data +
                    "/z2_cocycle.json' --mode theorem --json --seed 42";
  std::string one = run_cli(cmd), two = run_cli(cmd);
  return !one.empty() && one.find("exit=0") != std::string::npos && one == two;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], data = argv[2];

  struct Crit {
    const char* name;
    double limit;
    bool (*fn)();
  };
  const Crit crits[] = {
      {"coboundary composes to the trivial cochain (degrees 1,2)", 10,
       crit_complex},
      {"cohomology orders match the enumeration oracle", 10,
       crit_cohomology_oracle},
      {"normalization and the strong-normalization equivalence", 30,
       crit_normalization},
      {"cover idempotents, E-unitarity, projection laws", 10,
       crit_cover_laws},
      {"sampled action identity suite (xi/zeta/gamma/lambda)", 60,
       crit_action_identities},
      {"crossed module and extension axioms; induced module exact", 60,
       crit_extension_axioms},
      {"plain-transversal extraction returns the cocycle entrywise", 10,
       crit_exact_roundtrip},
      {"theorem harness on every order-preserving class", 120,
       crit_theorem_harness},
      {"equivalence witnesses pass the diagram checks", 60,
       crit_equivalence_witnesses},
  };
  int idx = 1;
  for (const auto& cr : crits) {
    Timer t;
    bool ok = false;
    try {
      ok = cr.fn();
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << "\n";
    }
    report(idx++, cr.name, ok, t.secs(), cr.limit);
  }
  {
    Timer t;
    bool ok = false;
    try {
      ok = crit_determinism(cli, data);
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << "\n";
    }
    report(10, "CLI roundtrip report is byte-identical across runs", ok,
           t.secs(), 60);
  }
  return failures == 0 ? 0 : 1;
}
