#include "bklrot/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bkl {

std::string StateLabel::to_string() const {
  std::string out;
  for (const Level& lvl : path) {
    out += "(" + std::to_string(lvl.component) + ",{";
    bool first = true;
    for (int bit = 0; bit < 30; ++bit) {
      if (lvl.memory & (1u << bit)) {
        if (!first) out += ",";
        out += letter_token({bit + 2, lvl.strand_count});
        first = false;
      }
    }
    out += "})";
  }
  out += base;
  return out;
}

namespace {

void check_tables(std::size_t states, std::size_t alpha,
                  const std::vector<StateId>& transitions) {
  if (transitions.size() != states * alpha)
    throw std::invalid_argument("automaton: transition table size mismatch");
  for (StateId t : transitions)
    if (t != kDead && t >= states)
      throw std::invalid_argument("automaton: transition target out of range");
}

std::size_t find_letter(const std::vector<Letter>& alphabet, Letter x) {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
  if (it == alphabet.end() || !(*it == x))
    throw std::invalid_argument("letter " + letter_token(x) +
                                " outside the machine's alphabet");
  return static_cast<std::size_t>(it - alphabet.begin());
}

void check_alphabet_sorted(const std::vector<Letter>& alphabet) {
  if (!std::is_sorted(alphabet.begin(), alphabet.end()))
    throw std::invalid_argument("automaton: alphabet must be sorted");
}

}  // namespace

Dfa::Dfa(int strand_count, std::vector<Letter> alphabet,
         std::vector<StateLabel> labels, std::vector<StateId> transitions,
         StateId initial)
    : n_(strand_count),
      alphabet_(std::move(alphabet)),
      labels_(std::move(labels)),
      transitions_(std::move(transitions)),
      initial_(initial) {
  check_alphabet_sorted(alphabet_);
  check_tables(labels_.size(), alphabet_.size(), transitions_);
  if (initial_ >= labels_.size())
    throw std::invalid_argument("automaton: initial state out of range");
}

std::size_t Dfa::letter_index(Letter x) const {
  return find_letter(alphabet_, x);
}

StateId Dfa::step(StateId s, Letter x) const {
  if (s == kDead) return kDead;
  return next(s, letter_index(x));
}

PartialAutomaton::PartialAutomaton(int strand_count,
                                   std::vector<Letter> alphabet,
                                   std::vector<StateLabel> labels,
                                   std::vector<StateId> transitions,
                                   std::vector<StateId> initial_map)
    : n_(strand_count),
      alphabet_(std::move(alphabet)),
      labels_(std::move(labels)),
      transitions_(std::move(transitions)),
      initial_map_(std::move(initial_map)) {
  check_alphabet_sorted(alphabet_);
  check_tables(labels_.size(), alphabet_.size(), transitions_);
  if (initial_map_.size() != alphabet_.size())
    throw std::invalid_argument("partial automaton: initial map size mismatch");
  for (StateId t : initial_map_)
    if (t != kDead && t >= labels_.size())
      throw std::invalid_argument("partial automaton: initial map out of range");
}

std::size_t PartialAutomaton::letter_index(Letter x) const {
  return find_letter(alphabet_, x);
}

Dfa close(const PartialAutomaton& p) {
  std::vector<StateLabel> labels;
  labels.reserve(p.state_count() + 1);
  for (StateId s = 0; s < p.state_count(); ++s) labels.push_back(p.label(s));
  labels.push_back(StateLabel{{}, "^"});
  std::vector<StateId> transitions = p.transitions();
  transitions.insert(transitions.end(), p.initial_map().begin(),
                     p.initial_map().end());
  return Dfa(p.strand_count(), p.alphabet(), std::move(labels),
             std::move(transitions), static_cast<StateId>(p.state_count()));
}

bool accepts(const Dfa& m, const Word& w) {
  if (!w.is_positive())
    throw std::invalid_argument("accepts: word must be positive");
  StateId s = m.initial();
  for (const SignedLetter& sl : w.items()) {
    s = m.step(s, sl.letter);
    if (s == kDead) return false;
  }
  return true;
}

Dfa prune(const Dfa& m) {
  const std::size_t a = m.alphabet().size();
  std::vector<bool> reach(m.state_count(), false);
  std::deque<StateId> queue{m.initial()};
  reach[m.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = m.next(s, j);
      if (t != kDead && !reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<StateId> remap(m.state_count(), kDead);
  std::vector<StateLabel> labels;
  for (StateId s = 0; s < m.state_count(); ++s) {
    if (reach[s]) {
      remap[s] = static_cast<StateId>(labels.size());
      labels.push_back(m.label(s));
    }
  }
  std::vector<StateId> transitions;
  transitions.reserve(labels.size() * a);
  for (StateId s = 0; s < m.state_count(); ++s) {
    if (!reach[s]) continue;
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = m.next(s, j);
      transitions.push_back(t == kDead ? kDead : remap[t]);
    }
  }
  return Dfa(m.strand_count(), m.alphabet(), std::move(labels),
             std::move(transitions), remap[m.initial()]);
}

Dfa minimize(const Dfa& m) {
  const Dfa r = prune(m);
  const std::size_t a = r.alphabet().size();
  const std::size_t ns = r.state_count();
  // Moore refinement; class 0 is the dead class.
  std::vector<std::size_t> cls(ns, 1);
  std::size_t classes = 2;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig_to_class;
    std::vector<std::size_t> next_cls(ns);
    for (StateId s = 0; s < ns; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t j = 0; j < a; ++j) {
        StateId t = r.next(s, j);
        sig.push_back(t == kDead ? 0 : cls[t]);
      }
      auto [it, inserted] = sig_to_class.try_emplace(sig, sig_to_class.size() + 1);
      next_cls[s] = it->second;
    }
    std::size_t next_count = sig_to_class.size() + 1;
    cls = std::move(next_cls);
    if (next_count == classes) break;
    classes = next_count;
  }
  // one representative per class, in order of least original state id
  std::vector<StateId> rep;
  std::vector<StateId> class_of(ns);
  std::map<std::size_t, StateId> first_seen;
  for (StateId s = 0; s < ns; ++s) {
    auto [it, inserted] = first_seen.try_emplace(cls[s], static_cast<StateId>(rep.size()));
    if (inserted) rep.push_back(s);
    class_of[s] = it->second;
  }
  std::vector<StateLabel> labels(rep.size());
  for (std::size_t c = 0; c < rep.size(); ++c) {
    // deterministic merged label: lexicographically least member label
    std::string best;
    bool have = false;
    StateId best_state = rep[c];
    for (StateId s = 0; s < ns; ++s) {
      if (class_of[s] != c) continue;
      std::string cand = r.label(s).to_string();
      if (!have || cand < best) {
        best = cand;
        have = true;
        best_state = s;
      }
    }
    labels[c] = r.label(best_state);
  }
  std::vector<StateId> transitions(rep.size() * a, kDead);
  for (std::size_t c = 0; c < rep.size(); ++c) {
    for (std::size_t j = 0; j < a; ++j) {
      StateId t = r.next(rep[c], j);
      transitions[c * a + j] = t == kDead ? kDead : class_of[t];
    }
  }
  return Dfa(r.strand_count(), r.alphabet(), std::move(labels),
             std::move(transitions), class_of[r.initial()]);
}

std::uint64_t count_accepted(const Dfa& m, int length) {
  if (length < 0) throw std::invalid_argument("count_accepted: negative length");
  const std::size_t a = m.alphabet().size();
  std::vector<std::uint64_t> cnt(m.state_count(), 0);
  cnt[m.initial()] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<std::uint64_t> nxt(m.state_count(), 0);
    for (StateId s = 0; s < m.state_count(); ++s) {
      if (cnt[s] == 0) continue;
      for (std::size_t j = 0; j < a; ++j) {
        StateId t = m.next(s, j);
        if (t != kDead) nxt[t] += cnt[s];
      }
    }
    cnt = std::move(nxt);
  }
  return std::accumulate(cnt.begin(), cnt.end(), std::uint64_t{0});
}

namespace {

// Export order: initial state first, remaining states sorted by label string.
std::vector<StateId> export_order(const Dfa& m) {
  std::vector<StateId> order{m.initial()};
  std::vector<StateId> rest;
  for (StateId s = 0; s < m.state_count(); ++s)
    if (s != m.initial()) rest.push_back(s);
  std::sort(rest.begin(), rest.end(), [&](StateId x, StateId y) {
    return m.label(x).to_string() < m.label(y).to_string();
  });
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

std::string export_text(const Dfa& m) {
  std::vector<StateId> order = export_order(m);
  std::vector<std::size_t> pos(m.state_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::ostringstream out;
  out << "n=" << m.strand_count() << "\n";
  out << "alphabet=";
  for (std::size_t j = 0; j < m.alphabet().size(); ++j) {
    if (j) out << ",";
    out << letter_token(m.alphabet()[j]);
  }
  out << "\n";
  for (std::size_t i = 0; i < order.size(); ++i)
    out << "state " << i << " label=" << m.label(order[i]).to_string() << "\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < m.alphabet().size(); ++j) {
      StateId t = m.next(order[i], j);
      if (t == kDead) continue;
      out << i << " --" << letter_token(m.alphabet()[j]) << "--> " << pos[t]
          << "\n";
    }
  }
  return out.str();
}

std::string export_dot(const Dfa& m) {
  std::vector<StateId> order = export_order(m);
  std::vector<std::size_t> pos(m.state_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::ostringstream out;
  out << "digraph {\n  rankdir=LR;\n  node [shape=circle];\n"
      << "  start [shape=point,label=\"\"];\n  start -> 0;\n";
  for (std::size_t i = 0; i < order.size(); ++i)
    out << "  " << i << " [label=\"" << m.label(order[i]).to_string()
        << "\"];\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < m.alphabet().size(); ++j) {
      StateId t = m.next(order[i], j);
      if (t == kDead) continue;
      out << "  " << i << " -> " << pos[t] << " [label=\""
          << letter_token(m.alphabet()[j]) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Dfa import_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw std::invalid_argument("import: missing n= line");
  int n = std::stoi(line.substr(2));
  if (!std::getline(in, line) || line.rfind("alphabet=", 0) != 0)
    throw std::invalid_argument("import: missing alphabet= line");
  std::vector<Letter> alphabet;
  {
    std::istringstream as(line.substr(9));
    std::string tok;
    while (std::getline(as, tok, ',')) {
      Word one = parse_word(tok, n);
      alphabet.push_back(one.items().at(0).letter);
    }
  }
  std::vector<StateLabel> labels;
  std::vector<std::tuple<std::size_t, Letter, std::size_t>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("state ", 0) == 0) {
      auto lpos = line.find(" label=");
      if (lpos == std::string::npos)
        throw std::invalid_argument("import: bad state line");
      std::size_t id = std::stoul(line.substr(6, lpos - 6));
      if (id != labels.size())
        throw std::invalid_argument("import: state ids must be consecutive");
      labels.push_back(StateLabel{{}, line.substr(lpos + 7)});
    } else {
      auto l = line.find(" --");
      auto r = line.find("--> ");
      if (l == std::string::npos || r == std::string::npos)
        throw std::invalid_argument("import: bad transition line");
      std::size_t from = std::stoul(line.substr(0, l));
      std::string tok = line.substr(l + 3, r - l - 3);
      std::size_t to = std::stoul(line.substr(r + 4));
      edges.emplace_back(from, parse_word(tok, n).items().at(0).letter, to);
    }
  }
  std::vector<StateId> transitions(labels.size() * alphabet.size(), kDead);
  for (auto& [from, x, to] : edges) {
    if (from >= labels.size() || to >= labels.size())
      throw std::invalid_argument("import: transition endpoint out of range");
    transitions[from * alphabet.size() + find_letter(alphabet, x)] =
        static_cast<StateId>(to);
  }
  return Dfa(n, std::move(alphabet), std::move(labels), std::move(transitions),
             0);
}

bool language_equal(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) return false;
  const std::size_t na = a.alphabet().size();
  std::set<std::pair<StateId, StateId>> seen;
  std::deque<std::pair<StateId, StateId>> queue;
  queue.push_back({a.initial(), b.initial()});
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    if ((sa == kDead) != (sb == kDead)) return false;
    if (sa == kDead) continue;
    for (std::size_t j = 0; j < na; ++j) {
      std::pair<StateId, StateId> nxt{a.next(sa, j), b.next(sb, j)};
      if (nxt.first == kDead && nxt.second == kDead) continue;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return true;
}

}  // namespace bkl
