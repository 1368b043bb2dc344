#include "isgcoh/crossed.hpp"

namespace isgcoh {

namespace {
Carrier<int> finite_carrier(const FiniteInverseSemigroup& S) {
  Carrier<int> c;
  c.mul = [&S](const int& a, const int& b) { return S.mul(a, b); };
  c.inv = [&S](const int& a) { return S.inv(a); };
  c.eq = [](const int& a, const int& b) { return a == b; };
  c.render = [&S](const int& a) { return S.name(a); };
  c.sample = [&S](Rng& rng) {
    std::uniform_int_distribution<int> d(0, S.size() - 1);
    return d(rng);
  };
  c.enumerate = [&S]() {
    std::vector<int> out(S.size());
    for (int i = 0; i < S.size(); ++i) out[i] = i;
    return out;
  };
  return c;
}
}  // namespace

Extension<int, int> finite_module_extension(const TModule& M) {
  Extension<int, int> X;
  X.M = &M;
  X.S = finite_carrier(*M.T);
  X.N = finite_carrier(M.A->sg);
  X.i = [](int a) { return a; };
  X.i_inv = [](const int& a) { return std::optional<int>(a); };
  X.beta = [&M](const int& a) { return M.theta_inv(M.A->comp(a)); };
  X.pi = [](const int& s) { return s; };
  X.alpha = [&M](const int& e) { return M.theta[e]; };
  X.lambda = [&M](const int& s, const int& a) { return M.eta[s][a]; };
  X.idempotents_S = [&M]() { return M.T->idempotents(); };
  X.in_beta_N = [&M](const int& s) { return M.T->idem(s); };
  X.preimage = [](int t, Rng&) { return t; };
  return X;
}

}  // namespace isgcoh
