#pragma once

#include <cstdint>
#include <vector>

#include "bklrot/word.hpp"

namespace bkl {

// Word-count budget for the brute-force closures below. The oracle is meant
// for desk-scale validation; anything larger is refused with an error.
inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

// Equivalence class of a positive word under the defining relations.
// All members have the same length; words are kept in canonical order, so
// words.front() is the lexicographically least representative.
struct EquivClass {
  int strand_count;
  std::vector<Word> words;
};

// All words obtained from w by one relation rewrite at one position.
std::vector<Word> relation_rewrites(int n, const Word& w);

EquivClass equivalence_class(int n, const Word& w,
                             std::size_t budget = kDefaultOracleBudget);

Word canonical_representative(int n, const Word& w,
                              std::size_t budget = kDefaultOracleBudget);

bool are_equivalent(int n, const Word& u, const Word& v,
                    std::size_t budget = kDefaultOracleBudget);

// Number of equivalence classes of positive words of the given length.
std::uint64_t count_classes(int n, int length,
                            std::size_t budget = kDefaultOracleBudget);

}  // namespace bkl
