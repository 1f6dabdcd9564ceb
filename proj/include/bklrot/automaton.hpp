#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "bklrot/word.hpp"

namespace bkl {

using StateId = std::uint32_t;

// The dead state is implicit: transitions to it are stored as kDead, it is
// absorbing, and it is the only non-accepting state.
inline constexpr StateId kDead = std::numeric_limits<StateId>::max();

// Structural state label: one level per construction layer, outermost first.
// A level records the component index of the cyclic plugging and the
// barrier-memory set (bit i of `memory` stands for a_{i+2, strand_count}).
// The base tag names the innermost state ("o" for the A2 / P2* loop state,
// "^" for a closure-added initial state, anything for imported machines).
struct StateLabel {
  struct Level {
    int component = 0;
    std::uint32_t memory = 0;
    int strand_count = 0;
    friend bool operator==(const Level&, const Level&) = default;
  };
  std::vector<Level> path;
  std::string base;

  std::string to_string() const;
  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

class Dfa {
 public:
  Dfa(int strand_count, std::vector<Letter> alphabet,
      std::vector<StateLabel> labels, std::vector<StateId> transitions,
      StateId initial);

  int strand_count() const { return n_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return labels_.size(); }
  const StateLabel& label(StateId s) const { return labels_[s]; }
  StateId initial() const { return initial_; }

  std::size_t letter_index(Letter x) const;  // throws if outside alphabet
  StateId next(StateId s, std::size_t letter_idx) const {
    return transitions_[s * alphabet_.size() + letter_idx];
  }
  StateId step(StateId s, Letter x) const;  // dead-absorbing

 private:
  int n_;
  std::vector<Letter> alphabet_;
  std::vector<StateLabel> labels_;
  std::vector<StateId> transitions_;  // state-major
  StateId initial_;
};

// As Dfa, but with an initial map alphabet -> state instead of a start state.
class PartialAutomaton {
 public:
  PartialAutomaton(int strand_count, std::vector<Letter> alphabet,
                   std::vector<StateLabel> labels,
                   std::vector<StateId> transitions,
                   std::vector<StateId> initial_map);

  int strand_count() const { return n_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return labels_.size(); }
  const StateLabel& label(StateId s) const { return labels_[s]; }
  const std::vector<StateId>& initial_map() const { return initial_map_; }

  std::size_t letter_index(Letter x) const;
  StateId next(StateId s, std::size_t letter_idx) const {
    return transitions_[s * alphabet_.size() + letter_idx];
  }
  const std::vector<StateId>& transitions() const { return transitions_; }

 private:
  int n_;
  std::vector<Letter> alphabet_;
  std::vector<StateLabel> labels_;
  std::vector<StateId> transitions_;
  std::vector<StateId> initial_map_;
};

// Adds a fresh accepting initial state with the closure-initial label "^"
// whose outgoing transitions realize the initial map.
Dfa close(const PartialAutomaton& p);

// Runs the machine on a positive word; every non-dead state accepts.
bool accepts(const Dfa& m, const Word& w);

Dfa prune(const Dfa& m);     // drop states unreachable from the initial state
Dfa minimize(const Dfa& m);  // language-preserving, minimal

std::uint64_t count_accepted(const Dfa& m, int length);

std::string export_text(const Dfa& m);
std::string export_dot(const Dfa& m);
Dfa import_text(const std::string& text);

// Exact language equality (synchronized search over the pair machine).
bool language_equal(const Dfa& a, const Dfa& b);

}  // namespace bkl
