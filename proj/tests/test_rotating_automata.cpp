#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>
#include <string>

#include "bklrot/automaton.hpp"
#include "bklrot/oracle.hpp"
#include "bklrot/rotating_automata.hpp"
#include "bklrot/splitting.hpp"
#include "test_util.hpp"

using bkl::Dfa;
using bkl::kDead;
using bkl::Letter;
using bkl::PartialAutomaton;
using bkl::StateId;
using bkl::Word;
using testutil::W;

namespace {

bool in_r_star(int n, const Word& w) {
  if (w.empty()) return true;
  return bkl::is_rotating(n, w) && w.back().letter.q == n;
}

// runs the closure and reports the final state, or kDead
StateId run(const Dfa& m, const Word& w) {
  StateId s = m.initial();
  for (const bkl::SignedLetter& sl : w.items()) {
    s = m.step(s, sl.letter);
    if (s == kDead) break;
  }
  return s;
}

}  // namespace

TEST_CASE("A2") {
  Dfa a2 = bkl::build_A2();
  CHECK(a2.state_count() == 1);
  Word w(2);
  for (int k = 0; k <= 10; ++k) {
    CHECK(bkl::accepts(a2, w));
    CHECK(bkl::count_accepted(a2, k) == 1);
    w = bkl::concat(w, W(2, "1.2"));
  }
}

TEST_CASE("P0") {
  // n = 3: no barrier letters at all, a single looping state
  PartialAutomaton p03 = bkl::build_P0(3);
  CHECK(p03.state_count() == 1);
  Dfa c = bkl::close(p03);
  for (int l = 0; l <= 6; ++l)
    CHECK(bkl::count_accepted(c, l) == 1);  // language a12*

  // n = 4 keeps only 4 of the 6 product states
  PartialAutomaton p04 = bkl::build_P0(4);
  CHECK(p04.state_count() == 4);
  CHECK(bkl::prune(bkl::close(bkl::build_P0(4, true))).state_count() == 5);

  // it recognizes the mirrors of R*_3
  Dfa c4 = bkl::close(p04);
  testutil::each_word_up_to(3, 6, [&](const Word& w) {
    CHECK(bkl::accepts(c4, bkl::mirror(w)) == in_r_star(3, w));
  });
}

TEST_CASE("P0 states carry the exact barrier memory") {
  // after reading mirror(w) for accepted w, the memory set equals the union
  // of the letters' barrier sets
  for (int n = 4; n <= 5; ++n) {
    Dfa c = bkl::close(bkl::build_P0(n));
    testutil::each_word_up_to(n - 1, 5, [&](const Word& w) {
      StateId s = run(c, bkl::mirror(bkl::rewrap(w, n - 1)));
      CHECK((s != kDead) == in_r_star(n - 1, w));
      if (s == kDead || s == c.initial()) return;
      std::uint32_t expected = 0;
      for (const bkl::SignedLetter& sl : w.items())
        for (Letter b : bkl::barrier_set(n, sl.letter))
          expected |= 1u << (b.p - 2);
      CHECK(c.label(s).path.front().memory == expected);
    });
  }
}

TEST_CASE("Pk is a twisted copy") {
  PartialAutomaton p1 = bkl::build_Pk(4, 1);
  CHECK(p1.alphabet() == std::vector<Letter>{{2, 3}, {2, 4}, {3, 4}});
  CHECK(p1.state_count() == bkl::build_P0(4).state_count());
  CHECK_THROWS_AS(bkl::build_Pk(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(bkl::build_Pk(4, 0), std::invalid_argument);

  Dfa c0 = bkl::close(bkl::build_P0(4));
  Dfa c1 = bkl::close(p1);
  testutil::each_word_up_to(3, 5, [&](const Word& w) {
    Word m = bkl::mirror(bkl::rewrap(w, 4));
    CHECK(bkl::accepts(c1, bkl::phi(4, 1, m)) == bkl::accepts(c0, m));
  });
}

TEST_CASE("P_star") {
  // the 3-strand machine is the known 3-state machine: states 1, 2, 3 with
  // loops a23@1, a13@2, a12@3, the cycle a13: 1->2, a12: 2->3, a23: 3->1,
  // and entry arrows a23 -> 1, a13 -> 2
  PartialAutomaton p3 = bkl::build_P_star(3);
  CHECK(p3.state_count() == 3);
  std::size_t defined = 0;
  for (StateId t : p3.initial_map()) defined += t != kDead;
  CHECK(defined == 2);  // entries for a23 and a13 only
  {
    std::vector<bkl::StateLabel> labels;
    for (int i = 1; i <= 3; ++i)
      labels.push_back({{}, std::to_string(i)});
    const StateId X = kDead;
    // alphabet order 1.2, 1.3, 2.3
    std::vector<StateId> t{X, 1, 0,   // 1: loop a23, a13 -> 2
                           2, 1, X,   // 2: loop a13, a12 -> 3
                           2, X, 0};  // 3: loop a12, a23 -> 1
    PartialAutomaton hand(3, bkl::letters(3), labels, t, {X, 1, 0});
    CHECK(bkl::language_equal(bkl::close(hand), bkl::close(p3)));
  }

  Dfa c3 = bkl::close(p3);
  testutil::each_word_up_to(3, 6, [&](const Word& w) {
    CHECK(bkl::accepts(c3, bkl::mirror(w)) == in_r_star(3, w));
  });

  Dfa c4 = bkl::close(bkl::build_P_star(4));
  CHECK(bkl::accepts(c4, bkl::mirror(W(4, "1.3 2.4"))));
  CHECK(bkl::accepts(c4, bkl::mirror(W(4, "2.3 2.4"))));  // 2.3 2.4 is rotating
  // 1.3 3.4 normalizes to 1.4 1.3, so it is not a rotating word
  CHECK(bkl::rotating_normal_form(4, W(4, "1.3 3.4")) == W(4, "1.4 1.3"));
  CHECK_FALSE(bkl::accepts(c4, bkl::mirror(W(4, "1.3 3.4"))));
  testutil::each_word_up_to(4, 4, [&](const Word& w) {
    CHECK(bkl::accepts(c4, bkl::mirror(w)) == in_r_star(4, w));
  });
}

TEST_CASE("A_n recognizes exactly the mirrored rotating words") {
  for (int n = 3; n <= 4; ++n) {
    Dfa a = bkl::build_A(n);
    const int maxl = n == 3 ? 6 : 5;
    testutil::each_word_up_to(n, maxl, [&](const Word& w) {
      bool acc = bkl::accepts(a, bkl::mirror(w));
      CHECK(acc == (bkl::rotating_normal_form(n, w) == w));
    });
  }
}

TEST_CASE("A_5 sampled against the normal form") {
  Dfa a5 = bkl::build_A(5);
  std::mt19937 rng(9);
  for (int i = 0; i < 100000; ++i) {
    Word w = testutil::random_positive_word(rng, 5, 8);
    CHECK(bkl::accepts(a5, bkl::mirror(w)) ==
          (bkl::rotating_normal_form(5, w) == w));
  }
}

TEST_CASE("state counts are pinned") {
  CHECK(bkl::prune(bkl::build_A(3)).state_count() == 4);
  CHECK(bkl::prune(bkl::build_A(4)).state_count() == 20);
  // reachable-only construction needs no pruning
  CHECK(bkl::build_A(4).state_count() == 20);
}

TEST_CASE("labels are unique within a machine") {
  for (int n = 2; n <= 5; ++n) {
    Dfa a = bkl::build_A(n);
    std::set<std::string> seen;
    for (StateId s = 0; s < a.state_count(); ++s)
      CHECK(seen.insert(a.label(s).to_string()).second);
  }
}

TEST_CASE("counting identity: accepted words = braid classes") {
  Dfa a3 = bkl::build_A(3);
  for (int l = 0; l <= 7; ++l)
    CHECK(bkl::count_accepted(a3, l) == bkl::count_classes(3, l));
  Dfa a4 = bkl::build_A(4);
  for (int l = 0; l <= 5; ++l)
    CHECK(bkl::count_accepted(a4, l) == bkl::count_classes(4, l));
}

TEST_CASE("3-strand template: runs must stay populated from the third on") {
  // x_b^{e_b} ... a13^{e3} a23^{e2} a12^{e1} with x_k cycling a12, a23, a13
  // is rotating iff e_k != 0 for all k >= 3
  auto template_rotating = [](const Word& w) {
    static const Letter cycle[3] = {{1, 2}, {2, 3}, {1, 3}};
    std::size_t i = w.size();
    int k = 1;
    while (i > 0) {
      const Letter expect = cycle[(k - 1) % 3];
      bool any = false;
      while (i > 0 && w.items()[i - 1].letter == expect) {
        --i;
        any = true;
      }
      if (k >= 3 && !any) return false;
      ++k;
    }
    return true;
  };
  Dfa a3 = bkl::build_A(3);
  testutil::each_word_up_to(3, 8, [&](const Word& w) {
    CHECK(bkl::accepts(a3, bkl::mirror(w)) == template_rotating(w));
  });
}
