#pragma once

#include <utility>

#include "bklrot/word.hpp"

namespace bkl {

// The 4-strand pair  w = (a23 a12 a13)^k a12^{3k},
//                    w' = (a13 a23 a12)^k a14 a23^{3k}.
// Both are 4-rotating, w' represents w * a14, yet their normal forms end in
// 3k copies of two different letters: the fellow-traveller property fails,
// so the rotating normal form is not right automatic.
std::pair<Word, Word> witness_pair(long k);

struct WitnessReport {
  bool equal_after_a14 = false;   // w' and w*a14 have the same normal form
  bool w_rotating = false;
  bool w_prime_rotating = false;
  bool tails_diverge = false;     // 3k trailing a12 vs 3k trailing a23
  bool delta_cube = true;         // k = 1 identities around delta_3^3
  bool ok() const {
    return equal_after_a14 && w_rotating && w_prime_rotating &&
           tails_diverge && delta_cube;
  }
};

WitnessReport verify_witness_report(long k);
bool verify_witness(long k);

}  // namespace bkl
