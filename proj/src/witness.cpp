#include "bklrot/witness.hpp"

#include <stdexcept>

#include "bklrot/splitting.hpp"

namespace bkl {

std::pair<Word, Word> witness_pair(long k) {
  if (k < 1) throw std::invalid_argument("witness_pair: k must be positive");
  const Letter a12{1, 2}, a13{1, 3}, a23{2, 3}, a14{1, 4};
  Word w = power(Word(4, {a23, a12, a13}), k);
  w = concat(w, power(Word(4, {a12}), 3 * k));
  Word wp = power(Word(4, {a13, a23, a12}), k);
  wp = concat(wp, Word(4, {a14}));
  wp = concat(wp, power(Word(4, {a23}), 3 * k));
  return {w, wp};
}

WitnessReport verify_witness_report(long k) {
  auto [w, wp] = witness_pair(k);
  WitnessReport rep;
  rep.equal_after_a14 = braids_equal(4, wp, concat(w, Word(4, {Letter{1, 4}})));
  rep.w_rotating = is_rotating(4, w);
  rep.w_prime_rotating = is_rotating(4, wp);
  rep.tails_diverge = true;
  for (long i = 0; i < 3 * k; ++i) {
    const Letter lw = w.items()[w.size() - 1 - i].letter;
    const Letter lp = wp.items()[wp.size() - 1 - i].letter;
    if (!(lw == Letter{1, 2}) || !(lp == Letter{2, 3})) rep.tails_diverge = false;
  }
  if (k == 1) {
    // a23 a12 a13 a12^3 ≡ a13 a23 a12 a23^3 = delta_3^3
    const Word lhs = parse_word("2.3 1.2 1.3 1.2 1.2 1.2", 3);
    const Word delta3_cubed = power(parse_word("1.2 2.3", 3), 3);
    rep.delta_cube = braids_equal(3, lhs, delta3_cubed);
  }
  return rep;
}

bool verify_witness(long k) { return verify_witness_report(k).ok(); }

}  // namespace bkl
