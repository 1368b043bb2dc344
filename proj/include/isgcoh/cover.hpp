#pragma once

#include "isgcoh/crossed.hpp"
#include "isgcoh/free_words.hpp"
#include "isgcoh/tmodule.hpp"

#include <map>
#include <memory>

namespace isgcoh {

// element of the E-unitary cover S = {(t,w) : t <= nu(w)}
struct CoverElem {
  int t;
  Word w;  // stored reduced
  friend bool operator==(const CoverElem&, const CoverElem&) = default;
};

// element of N = {(a,e,w) : a in A_theta(e), e <= nu(w)}
struct CoverN {
  int a;
  int e;
  Word w;  // stored reduced
  friend bool operator==(const CoverN&, const CoverN&) = default;
};

// The crossed module extension determined by a strongly normalized
// order-preserving 3-cocycle. Owns the xi memo table; lambda evaluates the
// closed form and, in checked mode, also the recursive gamma composition.
class CoverContext {
 public:
  CoverContext(const TModule& M, Cochain c, SampleConfig cfg);

  const TModule& M() const { return M_; }
  const Cochain& cocycle() const { return c_; }
  const SampleConfig& config() const { return cfg_; }

  // xi_t(w) for nonempty w; zeta extends by theta(r(t)) on the empty word
  int xi(int t, const Word& w) const;
  int zeta(int t, const Word& w) const;

  bool valid_s(const CoverElem& s) const;
  bool valid_n(const CoverN& n) const;
  CoverElem s_mul(const CoverElem& x, const CoverElem& y) const;
  CoverElem s_inv(const CoverElem& x) const;
  CoverN n_mul(const CoverN& x, const CoverN& y) const;
  CoverN n_inv(const CoverN& x) const;

  CoverN i(int a) const;
  std::optional<int> i_inv(const CoverN& n) const;
  CoverElem beta(const CoverN& n) const;
  int pi(const CoverElem& s) const { return s.t; }
  CoverN alpha(const CoverElem& e) const;

  CoverN gamma(int t, int eps, const CoverN& n) const;
  CoverN lambda_closed(const CoverElem& s, const CoverN& n) const;
  CoverN lambda_recursive(const CoverElem& s, const CoverN& n) const;
  // closed form; in checked mode also the recursive form, compared exactly
  CoverN lambda(const CoverElem& s, const CoverN& n) const;

  std::string render_s(const CoverElem& s) const;
  std::string render_n(const CoverN& n) const;

  Word random_reduced_word(Rng& rng) const;
  CoverElem sample_s(Rng& rng) const;
  CoverN sample_n(Rng& rng) const;
  CoverElem preimage(int t, Rng& rng) const;

 private:
  TModule M_;  // by value: the context must survive moves of the source
  Cochain c_;
  SampleConfig cfg_;
  mutable std::map<std::pair<int, Word>, int> memo_;
};

// assembles the Extension view over a shared CoverContext
Extension<CoverElem, CoverN> cover_extension(std::shared_ptr<CoverContext> ctx);

std::shared_ptr<CoverContext> build_extension_from_cocycle(
    const TModule& M, const Cochain& c, const SampleConfig& cfg);

}  // namespace isgcoh
