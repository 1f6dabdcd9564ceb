#pragma once

#include <vector>

#include "bklrot/word.hpp"

namespace bkl {

// phi_n-splitting (beta_b, ..., beta_1): entries[0] is beta_b, entries.back()
// is beta_1. Entries are (n-1)-strand rotating words; beta_b and every beta_k
// with k >= 3 are non-empty. Reassembling phi^{b-1}(beta_b)...beta_1 recovers
// the source braid.
struct Splitting {
  int strand_count;
  std::vector<Word> entries;

  std::size_t width() const { return entries.size(); }  // b
  // beta_k for k in [1, b]
  const Word& entry(std::size_t k) const { return entries[entries.size() - k]; }
};

// Maximal right divisor of the word's braid lying in BKL_{n-1}, returned as
// an (n-1)-rotating word. n >= 3.
Word bkl_tail(int n, const Word& w);

// Tail together with the corresponding quotient (still an n-strand word).
std::pair<Word, Word> strip_tail(int n, const Word& w);

Splitting phi_splitting(int n, const Word& w);  // w positive, non-empty

// phi^{b-1}(beta_b) . phi^{b-2}(beta_{b-1}) ... beta_1 as an n-strand word.
Word reassemble(const Splitting& s);

Word rotating_normal_form(int n, const Word& w);  // w positive

bool braids_equal(int n, const Word& u, const Word& v);

// { a_{p,n} : r < p < s } for x = a_{r,s}, s <= n-1.
std::vector<Letter> barrier_set(int n, Letter x);

// Does the word contain a letter a_{r,s} with r < p < s (an a_{p,n}-barrier)?
bool contains_barrier(const Word& w, int p);

// Maximal-suffix block decomposition (w_b, ..., w_1): blocks[0] is w_1.
// Each block is returned untwisted (phi^{-(k-1)} applied), as an (n-1)-word.
std::vector<Word> rotating_blocks(int n, const Word& w);

// Purely syntactic test: no monoid computation involved.
bool is_rotating(int n, const Word& w);

// Braid-level characterization of a valid phi_n-splitting: entries non-empty
// where required, tails of phi(beta_k) trivial, last letters of type
// a_{.,n-1}, and the barrier condition between consecutive entries.
bool is_valid_splitting(const Splitting& s);

// Ladder test: w a non-empty rotating (n-1)-strand word, 2 <= p <= n-1.
bool is_ladder(int n, const Word& w, int p);

}  // namespace bkl
