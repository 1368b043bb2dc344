#pragma once

#include "isgcoh/semigroup.hpp"

#include <string>
#include <vector>

namespace isgcoh {

// A letter of the free group on the elements of a semigroup T:
// base is a T element id, sign is +1 or -1.
struct Letter {
  int base;
  int sign;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;  // empty word is the group identity

inline Letter pos(int t) { return Letter{t, +1}; }
inline Letter neg(int t) { return Letter{t, -1}; }

// reverse the word and flip every sign
Word involution(const Word& w);

bool is_reduced(const Word& w);

// one-pass stack reduction; cancels adjacent x^e x^{-e} with equal base
Word reduce(const Word& w);

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// evaluate a nonempty word in T, using T-inverses for negative letters
int phi(const Word& w, const FiniteInverseSemigroup& T);

// nu(w) = phi(reduce(w)) in T^1; the empty reduced word evaluates to the
// adjoined identity, encoded as kAdjoinedOne.
inline constexpr int kAdjoinedOne = -1;
int nu(const Word& w, const FiniteInverseSemigroup& T);

// t <= nu(w) in T^1; against the adjoined identity this means t idempotent
bool leq_t1(int t, int nu_val, const FiniteInverseSemigroup& T);
bool cover_member(int t, const Word& w, const FiniteInverseSemigroup& T);

// word literals: comma-separated element names, "^-1" suffix for inverse
// letters, empty string for the empty word
std::string format_word(const Word& w, const FiniteInverseSemigroup& T);
Word parse_word(const std::string& text, const FiniteInverseSemigroup& T);

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (const auto& l : w) {
      h = (h ^ static_cast<size_t>(l.base * 2 + (l.sign > 0))) *
          1099511628211ull;
    }
    return h;
  }
};

}  // namespace isgcoh
