#include "bklrot/reversing.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkl {

Word complement(int n, Letter x, Letter y) {
  const int p = x.p, q = x.q, r = y.p, s = y.q;
  if (x == y) return Word(n);
  if (q == r) return Word(n, {Letter{p, s}});
  if (p == r && q > s) return Word(n, {Letter{s, q}});
  if (q == s && p > r) return Word(n, {Letter{r, p}});
  if (p < r && r < q && q < s) return Word(n, {Letter{r, q}, Letter{p, s}});
  if (r < p && p < s && s < q) return Word(n, {Letter{s, q}, Letter{r, p}});
  return Word(n, {Letter{r, s}});
}

namespace {

// One reversing pass over a raw item vector. Returns when no factor x y^-1
// remains, i.e. all negative letters precede all positive ones.
void reverse_in_place(int n, std::vector<SignedLetter>& v,
                      ReverseStrategy strategy, std::size_t step_budget) {
  std::size_t steps = 0;
  auto reversible_at = [&](std::size_t i) {
    return v[i].sign > 0 && v[i + 1].sign < 0;
  };
  std::size_t i = 0;  // scan cursor (leftmost strategy)
  while (true) {
    std::size_t pos = v.size();  // sentinel: none found
    if (strategy == ReverseStrategy::kLeftmost) {
      while (i + 1 < v.size() && !reversible_at(i)) ++i;
      if (i + 1 < v.size()) pos = i;
    } else {
      for (std::size_t j = v.size(); j-- > 1;) {
        if (reversible_at(j - 1)) {
          pos = j - 1;
          break;
        }
      }
    }
    if (pos == v.size()) return;
    if (++steps > step_budget)
      throw std::runtime_error(
          "reversing step budget exceeded; internal inconsistency");
    Letter x = v[pos].letter, y = v[pos + 1].letter;
    Word fxy = complement(n, x, y);
    Word fyx = complement(n, y, x);
    std::vector<SignedLetter> repl;
    repl.reserve(fxy.size() + fyx.size());
    for (auto it = fxy.items().rbegin(); it != fxy.items().rend(); ++it)
      repl.push_back({it->letter, -1});
    for (const SignedLetter& sl : fyx.items()) repl.push_back({sl.letter, +1});
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos),
            v.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(),
             repl.end());
    // a new factor can appear one slot to the left of the edit
    i = pos == 0 ? 0 : pos - 1;
  }
}

Fraction split_fraction(int n, const std::vector<SignedLetter>& v) {
  std::size_t neg = 0;
  while (neg < v.size() && v[neg].sign < 0) ++neg;
  std::vector<SignedLetter> den, num;
  den.reserve(neg);
  for (std::size_t i = neg; i-- > 0;) den.push_back({v[i].letter, +1});
  for (std::size_t i = neg; i < v.size(); ++i) {
    if (v[i].sign < 0)
      throw std::logic_error("reversing did not terminate in fraction shape");
    num.push_back(v[i]);
  }
  return Fraction{Word(n, std::move(den)), Word(n, std::move(num))};
}

}  // namespace

Fraction left_reverse(int n, const Word& w, ReverseStrategy strategy,
                      std::size_t step_budget) {
  if (w.strand_count() != n)
    throw std::invalid_argument("left_reverse: strand count mismatch");
  std::vector<SignedLetter> v = w.items();
  reverse_in_place(n, v, strategy, step_budget);
  return split_fraction(n, v);
}

bool right_divides_letter(int n, const Word& w, Letter x) {
  if (!w.is_positive())
    throw std::invalid_argument("right_divides_letter: word must be positive");
  return left_reverse(n, concat(w, inverse(Word(n, {x})))).denominator.empty();
}

Word right_quotient(int n, const Word& w, Letter x) {
  Fraction f = left_reverse(n, concat(w, inverse(Word(n, {x}))));
  if (!f.denominator.empty())
    throw std::invalid_argument("right_quotient: " + letter_token(x) +
                                " does not right-divide the word");
  return f.numerator;
}

bool right_divides_word(int n, const Word& w, const Word& d) {
  if (!w.is_positive() || !d.is_positive())
    throw std::invalid_argument("right_divides_word: words must be positive");
  return left_reverse(n, concat(w, inverse(d))).denominator.empty();
}

Word right_quotient_word(int n, const Word& w, const Word& d) {
  Fraction f = left_reverse(n, concat(w, inverse(d)));
  if (!f.denominator.empty())
    throw std::invalid_argument("right_quotient_word: not a right divisor");
  return f.numerator;
}

bool left_divides_word(int n, const Word& d, const Word& w) {
  return right_divides_word(n, flip(n, w), flip(n, d));
}

Word left_quotient_word(int n, const Word& d, const Word& w) {
  return flip(n, right_quotient_word(n, flip(n, w), flip(n, d)));
}

}  // namespace bkl
