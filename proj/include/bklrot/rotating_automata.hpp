#pragma once

#include "bklrot/automaton.hpp"

namespace bkl {

// Inductive construction of the machines recognizing mirrored rotating words.
// All builders materialize reachable states only unless `full` is set, which
// keeps the whole product of the barrier-memory construction (for debugging).

Dfa build_A2();                        // recognizes a12*
PartialAutomaton build_P2_star();      // recursion base: one state, loop a12

// Barrier-memory machine over the (n-1)-alphabet: wraps P*_{n-1} states with
// the set of barriers seen so far. n >= 3.
PartialAutomaton build_P0(int n, bool full = false);

// Twisted copy: letters pushed through phi_n^k, component index k. k in [1, n-1].
PartialAutomaton build_Pk(int n, int k, bool full = false);

// Cyclic plugging of the twisted copies; recognizes mirrored rotating words
// that end with a letter of upper index n. n >= 2.
PartialAutomaton build_P_star(int n, bool full = false);

// Machine for all mirrored n-rotating words. n >= 2.
Dfa build_A(int n, bool full = false);

}  // namespace bkl
