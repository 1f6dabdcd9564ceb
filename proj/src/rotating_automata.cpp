#include "bklrot/rotating_automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace bkl {

namespace {

StateLabel base_state_label() { return StateLabel{{}, "o"}; }

std::uint32_t barrier_mask(int n, Letter x) {
  std::uint32_t mask = 0;
  for (int p = std::max(2, x.p + 1); p <= std::min(n - 2, x.q - 1); ++p)
    mask |= 1u << (p - 2);
  return mask;
}

}  // namespace

Dfa build_A2() {
  return Dfa(2, letters(2), {base_state_label()}, {0}, 0);
}

PartialAutomaton build_P2_star() {
  return PartialAutomaton(2, letters(2), {base_state_label()}, {0}, {0});
}

PartialAutomaton build_P0(int n, bool full) {
  if (n < 3) throw std::invalid_argument("build_P0: need strand count >= 3");
  const PartialAutomaton prev = build_P_star(n - 1, full);
  const std::vector<Letter> alpha = letters(n - 1);  // == prev.alphabet()
  const std::size_t a = alpha.size();
  const std::uint32_t mask_count = n >= 4 ? (1u << (n - 3)) : 1u;

  using State = std::pair<StateId, std::uint32_t>;  // (inner state, memory)
  std::vector<State> states;
  if (full) {
    for (StateId s = 0; s < prev.state_count(); ++s)
      for (std::uint32_t m = 0; m < mask_count; ++m) states.push_back({s, m});
  } else {
    std::deque<State> queue;
    std::map<State, bool> seen;
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = prev.initial_map()[j];
      if (t == kDead) continue;
      State st{t, barrier_mask(n, alpha[j])};
      if (!seen.count(st)) {
        seen[st] = true;
        queue.push_back(st);
      }
    }
    while (!queue.empty()) {
      State st = queue.front();
      queue.pop_front();
      states.push_back(st);
      for (std::size_t j = 0; j < a; ++j) {
        StateId t = prev.next(st.first, j);
        if (t == kDead) continue;
        State nx{t, st.second | barrier_mask(n, alpha[j])};
        if (!seen.count(nx)) {
          seen[nx] = true;
          queue.push_back(nx);
        }
      }
    }
    std::sort(states.begin(), states.end());
  }

  std::map<State, StateId> index;
  for (std::size_t i = 0; i < states.size(); ++i)
    index[states[i]] = static_cast<StateId>(i);
  auto lookup = [&](StateId inner, std::uint32_t m) -> StateId {
    if (inner == kDead) return kDead;
    auto it = index.find({inner, m});
    return it == index.end() ? kDead : it->second;
  };

  std::vector<StateLabel> labels;
  labels.reserve(states.size());
  for (const State& st : states) {
    StateLabel lbl = prev.label(st.first);
    lbl.path.insert(lbl.path.begin(), StateLabel::Level{0, st.second, n});
    labels.push_back(std::move(lbl));
  }
  std::vector<StateId> transitions(states.size() * a, kDead);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = prev.next(states[i].first, j);
      transitions[i * a + j] =
          lookup(t, states[i].second | barrier_mask(n, alpha[j]));
    }
  }
  std::vector<StateId> initial_map(a, kDead);
  for (std::size_t j = 0; j < a; ++j)
    initial_map[j] = lookup(prev.initial_map()[j], barrier_mask(n, alpha[j]));
  return PartialAutomaton(n, alpha, std::move(labels), std::move(transitions),
                          std::move(initial_map));
}

PartialAutomaton build_Pk(int n, int k, bool full) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("build_Pk: component index out of range");
  const PartialAutomaton p0 = build_P0(n, full);
  std::vector<Letter> alpha;
  for (Letter x : p0.alphabet()) alpha.push_back(phi_letter(n, k, x));
  std::sort(alpha.begin(), alpha.end());
  const std::size_t a = alpha.size();

  std::vector<StateLabel> labels;
  for (StateId s = 0; s < p0.state_count(); ++s) {
    StateLabel lbl = p0.label(s);
    lbl.path.front().component = k;
    labels.push_back(std::move(lbl));
  }
  std::vector<StateId> transitions(p0.state_count() * a, kDead);
  std::vector<StateId> initial_map(a, kDead);
  for (std::size_t j = 0; j < a; ++j) {
    std::size_t j0 = p0.letter_index(phi_letter(n, -k, alpha[j]));
    initial_map[j] = p0.initial_map()[j0];
    for (StateId s = 0; s < p0.state_count(); ++s)
      transitions[s * a + j] = p0.next(s, j0);
  }
  return PartialAutomaton(n, std::move(alpha), std::move(labels),
                          std::move(transitions), std::move(initial_map));
}

PartialAutomaton build_P_star(int n, bool full) {
  if (n < 2) throw std::invalid_argument("build_P_star: need strand count >= 2");
  if (n == 2) return build_P2_star();
  const PartialAutomaton p0 = build_P0(n, full);
  const std::size_t inner_count = p0.state_count();
  const std::vector<Letter> alpha = letters(n);
  const std::size_t a = alpha.size();

  std::vector<std::uint32_t> memory(inner_count);
  for (StateId s = 0; s < inner_count; ++s)
    memory[s] = p0.label(s).path.front().memory;

  // entry point of component k+1 when the letter a_{p,n} crosses out of k
  auto entry = [&](int p) -> StateId {
    return p0.initial_map()[p0.letter_index({p - 1, n - 1})];
  };
  auto global_id = [&](int k, StateId inner) -> StateId {
    return inner == kDead
               ? kDead
               : static_cast<StateId>(k * inner_count + inner);
  };
  auto transition = [&](int k, StateId inner, Letter y) -> StateId {
    Letter x = phi_letter(n, -k, y);
    if (x.q <= n - 1)
      return global_id(k, p0.next(inner, p0.letter_index(x)));
    const int p = x.p;
    const bool allowed =
        p == n - 1 ||
        (2 <= p && p <= n - 2 && (memory[inner] & (1u << (p - 2))));
    if (!allowed) return kDead;
    return global_id((k + 1) % n, entry(p));
  };

  std::vector<StateId> initial_map(a, kDead);
  for (std::size_t j = 0; j < a; ++j) {
    Letter y = alpha[j];
    if (y.q != n) continue;
    initial_map[j] =
        y.p != 1 ? global_id(1, entry(y.p)) : global_id(2, entry(n - 1));
  }

  // restrict to states reachable from the initial map
  std::vector<bool> reach(n * inner_count, false);
  if (full) {
    std::fill(reach.begin(), reach.end(), true);
  } else {
    std::deque<StateId> queue;
    for (StateId t : initial_map) {
      if (t != kDead && !reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      StateId g = queue.front();
      queue.pop_front();
      int k = static_cast<int>(g / inner_count);
      StateId inner = g % static_cast<StateId>(inner_count);
      for (Letter y : alpha) {
        StateId t = transition(k, inner, y);
        if (t != kDead && !reach[t]) {
          reach[t] = true;
          queue.push_back(t);
        }
      }
    }
  }
  std::vector<StateId> remap(n * inner_count, kDead);
  std::vector<StateLabel> labels;
  for (StateId g = 0; g < reach.size(); ++g) {
    if (!reach[g]) continue;
    remap[g] = static_cast<StateId>(labels.size());
    StateLabel lbl = p0.label(g % inner_count);
    lbl.path.front().component = static_cast<int>(g / inner_count);
    labels.push_back(std::move(lbl));
  }
  std::vector<StateId> transitions(labels.size() * a, kDead);
  for (StateId g = 0; g < reach.size(); ++g) {
    if (!reach[g]) continue;
    int k = static_cast<int>(g / inner_count);
    StateId inner = g % static_cast<StateId>(inner_count);
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = transition(k, inner, alpha[j]);
      transitions[remap[g] * a + j] = t == kDead ? kDead : remap[t];
    }
  }
  for (StateId& t : initial_map)
    if (t != kDead) t = remap[t];
  return PartialAutomaton(n, alpha, std::move(labels), std::move(transitions),
                          std::move(initial_map));
}

Dfa build_A(int n, bool full) {
  if (n < 2) throw std::invalid_argument("build_A: need strand count >= 2");
  if (n == 2) return build_A2();
  const Dfa prev = build_A(n - 1, full);
  const PartialAutomaton star = build_P_star(n, full);
  const std::vector<Letter> alpha = letters(n);
  const std::size_t a = alpha.size();
  const StateId offset = static_cast<StateId>(prev.state_count());

  std::vector<StateLabel> labels;
  for (StateId s = 0; s < prev.state_count(); ++s) labels.push_back(prev.label(s));
  for (StateId s = 0; s < star.state_count(); ++s) labels.push_back(star.label(s));

  std::vector<StateId> transitions(labels.size() * a, kDead);
  for (StateId s = 0; s < prev.state_count(); ++s) {
    for (std::size_t j = 0; j < a; ++j) {
      Letter y = alpha[j];
      if (y.q <= n - 1) {
        transitions[s * a + j] = prev.next(s, prev.letter_index(y));
      } else {
        StateId t = star.initial_map()[star.letter_index(y)];
        transitions[s * a + j] = t == kDead ? kDead : offset + t;
      }
    }
  }
  for (StateId s = 0; s < star.state_count(); ++s) {
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = star.next(s, j);
      transitions[(offset + s) * a + j] = t == kDead ? kDead : offset + t;
    }
  }
  return Dfa(n, alpha, std::move(labels), std::move(transitions),
             prev.initial());
}

}  // namespace bkl
