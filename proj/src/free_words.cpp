#include "isgcoh/free_words.hpp"

#include <algorithm>
#include <sstream>

namespace isgcoh {

Word involution(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].base == w[i + 1].base && w[i].sign == -w[i + 1].sign) return false;
  return true;
}

Word reduce(const Word& w) {
  Word stack;
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().base == l.base &&
        stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

int phi(const Word& w, const FiniteInverseSemigroup& T) {
  if (w.empty()) throw std::invalid_argument("phi of the empty word");
  auto val = [&](const Letter& l) {
    return l.sign > 0 ? l.base : T.inv(l.base);
  };
  int acc = val(w[0]);
  for (size_t i = 1; i < w.size(); ++i) acc = T.mul(acc, val(w[i]));
  return acc;
}

int nu(const Word& w, const FiniteInverseSemigroup& T) {
  Word r = reduce(w);
  if (r.empty()) return kAdjoinedOne;
  return phi(r, T);
}

bool leq_t1(int t, int nu_val, const FiniteInverseSemigroup& T) {
  if (nu_val == kAdjoinedOne) return T.idem(t);
  return T.leq(t, nu_val);
}

bool cover_member(int t, const Word& w, const FiniteInverseSemigroup& T) {
  return leq_t1(t, nu(w, T), T);
}

std::string format_word(const Word& w, const FiniteInverseSemigroup& T) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += T.name(w[i].base);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

Word parse_word(const std::string& text, const FiniteInverseSemigroup& T) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int sign = +1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    auto id = T.id_of(tok);
    if (!id) throw std::invalid_argument("unknown element in word: " + tok);
    w.push_back(Letter{*id, sign});
  }
  return w;
}

}  // namespace isgcoh
