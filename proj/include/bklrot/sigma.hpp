#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bklrot/splitting.hpp"
#include "bklrot/word.hpp"

namespace bkl {

// delta_n^-t w with w rotating; when t > 0, delta_n does not left-divide w.
struct DeltaNormal {
  int strand_count;
  long t;
  Word w;
};

struct ArtinLetter {
  int index;  // >= 1
  int sign;   // +1 or -1
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

// Word in the standard Artin generators sigma_i.
struct SigmaWord {
  std::vector<ArtinLetter> items;
  std::string to_string() const;  // "s1 s2! ..." style tokens
  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;
};

enum class SigmaVerdict { kPositive, kNegative, kMixed, kTrivial };
std::string to_string(SigmaVerdict v);

// a12 a23 ... a_{n-1,n}, the Garside element as a word.
Word delta_word(int n);

// Unique expression delta_n^-t w of the word's braid with t minimal.
DeltaNormal delta_decompose(int n, const Word& w);

// The sigma_{n-1}-negative word delta^{-t+b-1} w_b delta^-1 w_{b-1} ... w_1,
// delta powers expanded into letter blocks. Requires t >= b-1.
Word sdn_word(int n, long t, const Splitting& s);

SigmaWord to_artin(int n, const Word& w);

// Highest Artin index occurring and the sign pattern of its occurrences.
std::pair<int, SigmaVerdict> sigma_scan(const SigmaWord& sw);

// The braid's unique sigma-definite representative.
Word sigma_definite_rep(int n, const Word& w);

// Membership in the language of sdn_word shapes whose reassembled braid is
// not left-divisible by delta_n. Requires at least one delta^-1 block.
bool is_sdn_word(int n, const Word& w);

// Pushes every delta^-1 block leftward via  u delta^-1 -> delta^-1 phi(u);
// used to check sdn_word syntactically. Input must tokenize into positive
// letters and exact delta^-1 blocks.
Word collect_deltas(int n, const Word& w);

}  // namespace bkl
