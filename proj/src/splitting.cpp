#include "bklrot/splitting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "bklrot/reversing.hpp"

namespace bkl {

namespace {

void require_positive(const Word& w, const char* who) {
  if (!w.is_positive())
    throw std::invalid_argument(std::string(who) + ": word must be positive");
}

void require_strands(const Word& w, int n, const char* who) {
  if (w.strand_count() != n)
    throw std::invalid_argument(std::string(who) + ": strand count mismatch");
}

}  // namespace

std::pair<Word, Word> strip_tail(int n, const Word& w) {
  if (n < 3) throw std::invalid_argument("strip_tail: need strand count >= 3");
  require_strands(w, n, "strip_tail");
  require_positive(w, "strip_tail");
  Word current = w;
  std::deque<SignedLetter> stripped;
  const std::vector<Letter> candidates = letters(n - 1);
  bool progress = true;
  while (progress) {
    progress = false;
    for (Letter x : candidates) {
      if (right_divides_letter(n, current, x)) {
        current = right_quotient(n, current, x);
        stripped.push_front({x, +1});
        progress = true;
        break;  // restart from the least candidate
      }
    }
  }
  Word tail(n - 1, std::vector<SignedLetter>(stripped.begin(), stripped.end()));
  return {rotating_normal_form(n - 1, tail), current};
}

Word bkl_tail(int n, const Word& w) { return strip_tail(n, w).first; }

Splitting phi_splitting(int n, const Word& w) {
  if (n < 3) throw std::invalid_argument("phi_splitting: need strand count >= 3");
  require_strands(w, n, "phi_splitting");
  require_positive(w, "phi_splitting");
  if (w.empty()) throw std::invalid_argument("phi_splitting: empty word");
  Splitting s{n, {}};
  Word gamma = w;
  int consecutive_empty = 0;
  while (!gamma.empty()) {
    auto [tail, quotient] = strip_tail(n, gamma);
    s.entries.push_back(tail);
    if (tail.empty()) {
      if (++consecutive_empty > n)
        throw std::logic_error("phi_splitting: no progress");
    } else {
      consecutive_empty = 0;
    }
    gamma = phi(n, -1, quotient);
  }
  std::reverse(s.entries.begin(), s.entries.end());
  return s;
}

Word reassemble(const Splitting& s) {
  const int n = s.strand_count;
  Word out(n);
  const std::size_t b = s.width();
  for (std::size_t i = 0; i < b; ++i)
    out = concat(out, phi(n, static_cast<long>(b - 1 - i), s.entries[i]));
  return out;
}

Word rotating_normal_form(int n, const Word& w) {
  require_strands(w, n, "rotating_normal_form");
  require_positive(w, "rotating_normal_form");
  if (n == 2 || w.empty()) return w;
  return reassemble(phi_splitting(n, w));
}

bool braids_equal(int n, const Word& u, const Word& v) {
  return rotating_normal_form(n, u) == rotating_normal_form(n, v);
}

std::vector<Letter> barrier_set(int n, Letter x) {
  if (x.q > n - 1)
    throw std::invalid_argument("barrier_set: letter must lie in BKL_{n-1}");
  std::vector<Letter> out;
  for (int p = x.p + 1; p < x.q; ++p) out.push_back({p, n});
  return out;
}

bool contains_barrier(const Word& w, int p) {
  for (const SignedLetter& sl : w.items())
    if (sl.letter.p < p && p < sl.letter.q) return true;
  return false;
}

std::vector<Word> rotating_blocks(int n, const Word& w) {
  require_strands(w, n, "rotating_blocks");
  require_positive(w, "rotating_blocks");
  std::vector<Word> blocks;  // w_1 first
  std::vector<SignedLetter> remaining = w.items();
  long k = 0;
  int without_progress = 0;
  while (!remaining.empty()) {
    // maximal suffix whose phi^{-k} image lies in the (n-1)-alphabet
    std::vector<SignedLetter> block;
    while (!remaining.empty()) {
      Letter x = phi_letter(n, -k, remaining.back().letter);
      if (x.q > n - 1) break;
      block.push_back({x, +1});
      remaining.pop_back();
    }
    std::reverse(block.begin(), block.end());
    blocks.emplace_back(n - 1, std::move(block));
    if (blocks.back().empty()) {
      if (++without_progress > n)
        throw std::logic_error("rotating_blocks: no progress");
    } else {
      without_progress = 0;
    }
    ++k;
  }
  return blocks;
}

bool is_rotating(int n, const Word& w) {
  require_strands(w, n, "is_rotating");
  require_positive(w, "is_rotating");
  if (n == 2 || w.empty()) return true;
  const std::vector<Word> blocks = rotating_blocks(n, w);  // w_1 first
  const std::size_t b = blocks.size();
  auto block = [&](std::size_t k) -> const Word& { return blocks[k - 1]; };
  for (std::size_t k = 1; k <= b; ++k) {
    const Word& wk = block(k);
    if (k >= 3 && (wk.empty() || wk.back().letter.q != n - 1)) return false;
    if (k == 2 && !wk.empty() && wk.back().letter.q != n - 1) return false;
    if (!is_rotating(n - 1, wk)) return false;
  }
  // barrier condition between consecutive blocks
  for (std::size_t k = 3; k <= b; ++k) {
    Letter last = block(k).back().letter;  // a_{p-1,n-1}
    int p = last.p + 1;
    if (p != n - 1 && !contains_barrier(block(k - 1), p)) return false;
  }
  return true;
}

bool is_valid_splitting(const Splitting& s) {
  const int n = s.strand_count;
  const std::size_t b = s.width();
  if (b == 0) return false;
  for (std::size_t k = 1; k <= b; ++k) {
    const Word& beta = s.entry(k);
    if (beta.strand_count() != n - 1 || !beta.is_positive()) return false;
    if ((k >= 3 || k == b) && beta.empty()) return false;
    if (k >= 2 && !beta.empty()) {
      if (beta.back().letter.q != n - 1) return false;  // last letter a_{.,n-1}
      if (!bkl_tail(n, phi(n, 1, beta)).empty()) return false;
    }
  }
  for (std::size_t k = 3; k <= b; ++k) {
    Letter last = s.entry(k).back().letter;
    int p = last.p + 1;
    if (p != n - 1 && !contains_barrier(s.entry(k - 1), p)) return false;
  }
  return true;
}

bool is_ladder(int n, const Word& w, int p) {
  if (n < 3) throw std::invalid_argument("is_ladder: need strand count >= 3");
  if (p < 2 || p > n - 1) throw std::invalid_argument("is_ladder: p out of range");
  if (w.empty()) throw std::invalid_argument("is_ladder: empty word");
  Word inner = rewrap(w, n - 1);  // also checks q <= n-1
  if (!is_rotating(n - 1, inner))
    throw std::invalid_argument("is_ladder: word is not rotating");
  int height = p;
  for (const SignedLetter& sl : inner.items()) {
    if (height < n - 1 && sl.letter.p < height && height < sl.letter.q)
      height = sl.letter.q;  // forced rung: barriers may not sit between rungs
  }
  return height == n - 1 && inner.back().letter.q == n - 1;
}

}  // namespace bkl
