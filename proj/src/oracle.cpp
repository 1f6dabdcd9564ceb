#include "bklrot/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace bkl {

namespace {

// Positive words are shuffled around as strings of alphabet indices; string
// comparison then coincides with the canonical word order.
struct Codec {
  int n;
  std::vector<Letter> alpha;

  explicit Codec(int n_) : n(n_), alpha(letters(n_)) {
    if (alpha.size() > 200) throw std::invalid_argument("oracle: strand count too large");
  }

  char code(Letter x) const {
    auto it = std::lower_bound(alpha.begin(), alpha.end(), x);
    if (it == alpha.end() || !(*it == x))
      throw std::invalid_argument("oracle: letter out of range");
    return static_cast<char>(it - alpha.begin());
  }

  std::string encode(const Word& w) const {
    if (!w.is_positive())
      throw std::invalid_argument("oracle: word must be positive");
    std::string s;
    s.reserve(w.size());
    for (const SignedLetter& it : w.items()) s.push_back(code(it.letter));
    return s;
  }

  Word decode(const std::string& s) const {
    std::vector<SignedLetter> items;
    items.reserve(s.size());
    for (char c : s) items.push_back({alpha[static_cast<std::size_t>(c)], +1});
    return Word(n, std::move(items));
  }
};

bool disjoint_or_nested(Letter a, Letter b) {
  if (a.q < b.p || b.q < a.p) return true;                  // disjoint
  if (b.p < a.p && a.q < b.q) return true;                  // a nested in b
  if (a.p < b.p && b.q < a.q) return true;                  // b nested in a
  return false;
}

// The triple relation a_{p,q} a_{q,r} = a_{q,r} a_{p,r} = a_{p,r} a_{p,q}
// (p < q < r): given a two-letter factor matching one form, yields the other
// two. Returns the alternatives for the factor (x, y), possibly empty.
void factor_rewrites(Letter x, Letter y,
                     std::vector<std::pair<Letter, Letter>>& out) {
  out.clear();
  if (disjoint_or_nested(x, y)) {
    out.push_back({y, x});
    return;
  }
  if (x.q == y.p) {  // a_{p,q} a_{q,r}
    int p = x.p, q = x.q, r = y.q;
    out.push_back({{q, r}, {p, r}});
    out.push_back({{p, r}, {p, q}});
  } else if (x.q == y.q && y.p < x.p) {  // a_{q,r} a_{p,r}
    int p = y.p, q = x.p, r = x.q;
    out.push_back({{p, q}, {q, r}});
    out.push_back({{p, r}, {p, q}});
  } else if (x.p == y.p && y.q < x.q) {  // a_{p,r} a_{p,q}
    int p = x.p, q = y.q, r = x.q;
    out.push_back({{p, q}, {q, r}});
    out.push_back({{q, r}, {p, r}});
  }
}

std::vector<std::string> encoded_rewrites(const Codec& cd, const std::string& s) {
  std::vector<std::string> out;
  std::vector<std::pair<Letter, Letter>> alts;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    Letter x = cd.alpha[static_cast<std::size_t>(s[i])];
    Letter y = cd.alpha[static_cast<std::size_t>(s[i + 1])];
    factor_rewrites(x, y, alts);
    for (const auto& [a, b] : alts) {
      std::string t = s;
      t[i] = cd.code(a);
      t[i + 1] = cd.code(b);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// BFS closure; returns all encoded members, sorted. If `stop_at` is non-null,
// stops early (returning an empty vector) as soon as that word is reached.
std::vector<std::string> closure(const Codec& cd, const std::string& start,
                                 std::size_t budget,
                                 const std::string* stop_at, bool* found) {
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  if (found) *found = (stop_at && *stop_at == start);
  while (!queue.empty()) {
    if (found && *found) return {};
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for (std::string& nb : encoded_rewrites(cd, cur)) {
      if (seen.insert(nb).second) {
        if (seen.size() > budget)
          throw std::runtime_error(
              "oracle budget exceeded (" + std::to_string(budget) +
              " visited words); enumeration refused");
        if (stop_at && nb == *stop_at) {
          if (found) *found = true;
          return {};
        }
        queue.push_back(std::move(nb));
      }
    }
  }
  std::vector<std::string> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<Word> relation_rewrites(int n, const Word& w) {
  Codec cd(n);
  std::vector<Word> out;
  for (const std::string& s : encoded_rewrites(cd, cd.encode(w)))
    out.push_back(cd.decode(s));
  return out;
}

EquivClass equivalence_class(int n, const Word& w, std::size_t budget) {
  Codec cd(n);
  EquivClass cls{n, {}};
  for (const std::string& s : closure(cd, cd.encode(w), budget, nullptr, nullptr))
    cls.words.push_back(cd.decode(s));
  return cls;
}

Word canonical_representative(int n, const Word& w, std::size_t budget) {
  return equivalence_class(n, w, budget).words.front();
}

bool are_equivalent(int n, const Word& u, const Word& v, std::size_t budget) {
  if (u.strand_count() != n || v.strand_count() != n)
    throw std::invalid_argument("are_equivalent: strand count mismatch");
  if (u.size() != v.size()) return false;
  Codec cd(n);
  std::string target = cd.encode(v);
  bool found = false;
  closure(cd, cd.encode(u), budget, &target, &found);
  return found;
}

std::uint64_t count_classes(int n, int length, std::size_t budget) {
  if (length < 0) throw std::invalid_argument("count_classes: negative length");
  Codec cd(n);
  const std::size_t gens = cd.alpha.size();
  std::uint64_t total = 1;
  for (int i = 0; i < length; ++i) {
    total *= gens;
    if (total > budget)
      throw std::runtime_error("oracle budget exceeded: " +
                               std::to_string(gens) + "^" +
                               std::to_string(length) + " words");
  }
  std::unordered_set<std::string> seen;
  std::uint64_t classes = 0;
  std::string word(static_cast<std::size_t>(length), '\0');
  while (true) {
    if (!seen.count(word)) {
      ++classes;
      for (std::string& m : closure(cd, word, budget, nullptr, nullptr))
        seen.insert(std::move(m));
      if (seen.size() > budget)
        throw std::runtime_error("oracle budget exceeded");
    }
    // odometer over alphabet indices
    int i = length - 1;
    while (i >= 0 && word[static_cast<std::size_t>(i)] ==
                         static_cast<char>(gens - 1)) {
      word[static_cast<std::size_t>(i)] = '\0';
      --i;
    }
    if (i < 0) break;
    ++word[static_cast<std::size_t>(i)];
  }
  return classes;
}

}  // namespace bkl
