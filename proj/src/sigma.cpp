#include "bklrot/sigma.hpp"

#include <algorithm>
#include <stdexcept>

#include "bklrot/reversing.hpp"

namespace bkl {

std::string SigmaWord::to_string() const {
  std::string out;
  for (const ArtinLetter& a : items) {
    if (!out.empty()) out += ' ';
    out += "σ" + std::to_string(a.index);
    if (a.sign < 0) out += '!';
  }
  return out;
}

std::string to_string(SigmaVerdict v) {
  switch (v) {
    case SigmaVerdict::kPositive: return "positive";
    case SigmaVerdict::kNegative: return "negative";
    case SigmaVerdict::kMixed: return "mixed";
    case SigmaVerdict::kTrivial: return "trivial";
  }
  return "?";
}

Word delta_word(int n) {
  std::vector<SignedLetter> items;
  for (int i = 1; i < n; ++i) items.push_back({Letter{i, i + 1}, +1});
  return Word(n, std::move(items));
}

DeltaNormal delta_decompose(int n, const Word& w) {
  if (w.strand_count() != n)
    throw std::invalid_argument("delta_decompose: strand count mismatch");
  const Fraction f = left_reverse(n, w);
  const Word delta = delta_word(n);
  // delta^t w = phi^t(D)^-1 (delta^t N); positive iff phi^t(D) left-divides.
  for (long t = 0; t <= static_cast<long>(f.denominator.size()); ++t) {
    Word lhs = phi(n, t, f.denominator);
    Word rhs = concat(power(delta, t), f.numerator);
    if (left_divides_word(n, lhs, rhs)) {
      Word u = left_quotient_word(n, lhs, rhs);
      return DeltaNormal{n, t, rotating_normal_form(n, u)};
    }
  }
  throw std::logic_error("delta_decompose: no exponent found");
}

Word sdn_word(int n, long t, const Splitting& s) {
  if (s.strand_count != n)
    throw std::invalid_argument("sdn_word: strand count mismatch");
  const long b = static_cast<long>(s.width());
  if (b == 0) throw std::invalid_argument("sdn_word: empty splitting");
  if (t < b - 1)
    throw std::invalid_argument(
        "sdn_word: t < b-1, the quotient is not sigma_{n-1}-negative");
  const Word delta_inv = inverse(delta_word(n));
  Word out = power(delta_inv, t - b + 1);
  for (long k = b; k >= 1; --k) {
    out = concat(out, rewrap(s.entry(static_cast<std::size_t>(k)), n));
    if (k > 1) out = concat(out, delta_inv);
  }
  return out;
}

SigmaWord to_artin(int n, const Word& w) {
  if (w.strand_count() > n)
    throw std::invalid_argument("to_artin: strand count mismatch");
  SigmaWord out;
  for (const SignedLetter& sl : w.items()) {
    const int p = sl.letter.p, q = sl.letter.q;
    for (int i = p; i <= q - 2; ++i) out.items.push_back({i, +1});
    out.items.push_back({q - 1, sl.sign});
    for (int i = q - 2; i >= p; --i) out.items.push_back({i, -1});
  }
  return out;
}

std::pair<int, SigmaVerdict> sigma_scan(const SigmaWord& sw) {
  int index = 0;
  for (const ArtinLetter& a : sw.items) index = std::max(index, a.index);
  if (index == 0) return {0, SigmaVerdict::kTrivial};
  bool pos = false, neg = false;
  for (const ArtinLetter& a : sw.items) {
    if (a.index != index) continue;
    (a.sign > 0 ? pos : neg) = true;
  }
  if (pos && neg) return {index, SigmaVerdict::kMixed};
  return {index, pos ? SigmaVerdict::kPositive : SigmaVerdict::kNegative};
}

namespace {

int max_upper_index(const Word& w) {
  int m = 0;
  for (const SignedLetter& sl : w.items()) m = std::max(m, sl.letter.q);
  return m;
}

// Splitting of a rotating word, accepting the empty word as the width-one
// splitting with a single empty entry (used for the braids delta^-t).
Splitting splitting_or_trivial(int n, const Word& w) {
  if (w.empty()) return Splitting{n, {Word(n - 1)}};
  return phi_splitting(n, w);
}

// sigma_{k-1}-negative criterion for delta_k^-t u, t >= 1: t >= b-1.
bool negative_side(long t, const Splitting& s) {
  return t >= static_cast<long>(s.width()) - 1;
}

}  // namespace

Word sigma_definite_rep(int n, const Word& w) {
  if (w.strand_count() != n)
    throw std::invalid_argument("sigma_definite_rep: strand count mismatch");
  int k = n;
  Word cur = w;
  while (true) {
    if (k == 2) {
      long e = 0;
      for (const SignedLetter& sl : cur.items()) e += sl.sign;
      Word a12(2, {Letter{1, 2}});
      Word rep = e >= 0 ? power(a12, e) : inverse(power(a12, -e));
      return rewrap(rep, n);
    }
    const DeltaNormal dn = delta_decompose(k, cur);
    if (dn.t == 0) {
      if (dn.w.empty()) return Word(n);
      const int m = max_upper_index(dn.w);
      if (m == 2) return rewrap(dn.w, n);
      // positive braid of index m: invert the negative form of its inverse
      const Word inv = inverse(rewrap(dn.w, m));
      const DeltaNormal di = delta_decompose(m, inv);
      const Splitting si = splitting_or_trivial(m, di.w);
      if (di.t < 1 || !negative_side(di.t, si))
        throw std::logic_error("sigma_definite_rep: inverse not negative");
      return rewrap(inverse(sdn_word(m, di.t, si)), n);
    }
    const Splitting s = splitting_or_trivial(k, dn.w);
    if (negative_side(dn.t, s)) return rewrap(sdn_word(k, dn.t, s), n);
    const DeltaNormal di = delta_decompose(k, inverse(cur));
    if (di.t == 0) {
      // the inverse braid is positive; restart from it
      cur = inverse(rewrap(di.w, std::max(2, max_upper_index(di.w))));
      k = cur.strand_count();
      continue;
    }
    const Splitting si = splitting_or_trivial(k, di.w);
    if (negative_side(di.t, si))
      return rewrap(inverse(sdn_word(k, di.t, si)), n);
    // neither sigma_{k-1}-negative nor -positive: the braid lives in B_{k-1}
    const Word delta_prev = delta_word(k - 1);
    bool descended = false;
    for (long steps = 0; steps <= 4096; ++steps) {
      Word candidate = concat(power(rewrap(delta_prev, k), steps), cur);
      Fraction f = left_reverse(k, candidate);
      if (!left_divides_word(k, f.denominator, f.numerator)) continue;
      Word v = rotating_normal_form(
          k, left_quotient_word(k, f.denominator, f.numerator));
      if (max_upper_index(v) > k - 1)
        throw std::logic_error("sigma_definite_rep: descent left strand k in use");
      cur = concat(inverse(power(delta_prev, steps)), rewrap(v, k - 1));
      --k;
      descended = true;
      break;
    }
    if (!descended)
      throw std::logic_error("sigma_definite_rep: descent did not terminate");
  }
}

namespace {

// Tokenizes w into positive letters and delta^-1 blocks; true/false per token.
// Throws if a negative letter does not open an exact delta^-1 block.
std::vector<std::pair<bool, SignedLetter>> tokenize_sdn(int n, const Word& w) {
  const Word delta_inv = inverse(delta_word(n));
  const auto& pattern = delta_inv.items();
  std::vector<std::pair<bool, SignedLetter>> out;  // (is_delta_marker, letter)
  const auto& items = w.items();
  std::size_t i = 0;
  while (i < items.size()) {
    if (items[i].sign > 0) {
      out.push_back({false, items[i]});
      ++i;
      continue;
    }
    if (i + pattern.size() > items.size())
      throw std::invalid_argument("word does not tokenize into delta^-1 blocks");
    for (std::size_t j = 0; j < pattern.size(); ++j)
      if (!(items[i + j] == pattern[j]))
        throw std::invalid_argument("word does not tokenize into delta^-1 blocks");
    out.push_back({true, SignedLetter{}});
    i += pattern.size();
  }
  return out;
}

}  // namespace

Word collect_deltas(int n, const Word& w) {
  auto tokens = tokenize_sdn(n, w);
  // repeatedly move a delta^-1 left through the letter run before it,
  // twisting the run by phi
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!tokens[i].first || tokens[i - 1].first) continue;
      std::size_t start = i;
      while (start > 0 && !tokens[start - 1].first) --start;
      for (std::size_t j = start; j < i; ++j)
        tokens[j].second.letter = phi_letter(n, 1, tokens[j].second.letter);
      std::rotate(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                  tokens.begin() + static_cast<std::ptrdiff_t>(i),
                  tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      moved = true;
      break;
    }
  }
  const Word delta_inv = inverse(delta_word(n));
  Word out(n);
  for (const auto& [is_delta, letter] : tokens)
    out = is_delta ? concat(out, delta_inv) : concat(out, Word(n, {letter.letter}));
  return out;
}

bool is_sdn_word(int n, const Word& w) {
  if (w.strand_count() != n) return false;
  if (n == 2) {  // SDN_2 is the set of negative powers of a12
    if (w.empty()) return false;
    for (const SignedLetter& sl : w.items())
      if (sl.sign != -1) return false;
    return true;
  }
  std::vector<std::pair<bool, SignedLetter>> tokens;
  try {
    tokens = tokenize_sdn(n, w);
  } catch (const std::invalid_argument&) {
    return false;
  }
  long deltas = 0;
  for (const auto& t : tokens) deltas += t.first ? 1 : 0;
  if (deltas < 1) return false;  // no sigma_{n-1}^-1 at all
  // leading delta run (the delta^{-t+b-1} prefix, so t >= b-1 holds by
  // construction), then blocks w_b ... w_1 separated by single deltas
  std::size_t i = 0;
  while (i < tokens.size() && tokens[i].first) ++i;
  std::vector<Word> entries;  // w_b first
  std::vector<SignedLetter> run;
  for (; i < tokens.size(); ++i) {
    if (tokens[i].first) {
      entries.emplace_back(n - 1, run);
      run.clear();
    } else {
      Letter x = tokens[i].second.letter;
      if (x.q > n - 1) return false;  // entries must be (n-1)-words
      run.push_back({x, +1});
    }
  }
  entries.emplace_back(n - 1, run);
  // (w_b, ..., w_1) must be a genuine splitting sequence, or the trivial
  // single empty entry (the words delta^-t themselves)
  Splitting s{n, entries};
  if (entries.size() == 1 && entries[0].empty()) return true;
  if (!is_valid_splitting(s)) return false;
  for (const Word& e : entries)
    if (!is_rotating(n - 1, e)) return false;
  return !left_divides_word(n, delta_word(n), reassemble(s));
}

}  // namespace bkl
