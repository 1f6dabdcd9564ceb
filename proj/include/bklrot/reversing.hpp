#pragma once

#include <cstdint>

#include "bklrot/word.hpp"

namespace bkl {

inline constexpr std::size_t kDefaultReversingBudget = 1'000'000;

// Left fraction D^-1 N with both components positive.
struct Fraction {
  Word denominator;
  Word numerator;
};

enum class ReverseStrategy { kLeftmost, kRightmost };

// The left complement f_n(x, y): f_n(x,y) x ≡ f_n(y,x) y for all letters.
Word complement(int n, Letter x, Letter y);

// Left reversing: repeatedly replace a factor x y^-1 by f(x,y)^-1 f(y,x)
// until the word has shape D^-1 N. The result does not depend on the
// strategy; the leftmost reversible factor is the default.
Fraction left_reverse(int n, const Word& w,
                      ReverseStrategy strategy = ReverseStrategy::kLeftmost,
                      std::size_t step_budget = kDefaultReversingBudget);

bool right_divides_letter(int n, const Word& w, Letter x);
Word right_quotient(int n, const Word& w, Letter x);

bool right_divides_word(int n, const Word& w, const Word& d);
Word right_quotient_word(int n, const Word& w, const Word& d);

bool left_divides_word(int n, const Word& d, const Word& w);
Word left_quotient_word(int n, const Word& d, const Word& w);

}  // namespace bkl
