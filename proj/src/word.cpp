#include "bklrot/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bkl {

namespace {

void check_strand_count(int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
}

void check_letter(Letter x, int n) {
  if (x.p < 1 || x.p >= x.q || x.q > n) {
    throw std::invalid_argument("letter " + letter_token(x) +
                                " out of range for strand count " +
                                std::to_string(n));
  }
}

}  // namespace

Word::Word(int strand_count) : n_(strand_count) { check_strand_count(n_); }

Word::Word(int strand_count, std::vector<SignedLetter> items)
    : n_(strand_count), items_(std::move(items)) {
  check_strand_count(n_);
  for (const SignedLetter& s : items_) {
    check_letter(s.letter, n_);
    if (s.sign != 1 && s.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

Word::Word(int strand_count, std::initializer_list<Letter> positive_letters)
    : n_(strand_count) {
  check_strand_count(n_);
  items_.reserve(positive_letters.size());
  for (Letter x : positive_letters) {
    check_letter(x, n_);
    items_.push_back({x, +1});
  }
}

bool Word::is_positive() const {
  for (const SignedLetter& s : items_)
    if (s.sign < 0) return false;
  return true;
}

std::vector<Letter> letters(int n) {
  check_strand_count(n);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q <= n; ++q) out.push_back({p, q});
  return out;
}

std::string letter_token(Letter x) {
  return std::to_string(x.p) + "." + std::to_string(x.q);
}

Word parse_word(const std::string& text, int n) {
  std::vector<SignedLetter> items;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = +1;
    if (!tok.empty() && tok.back() == '!') {
      sign = -1;
      tok.pop_back();
    }
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
      throw std::invalid_argument("malformed letter token: '" + tok + "'");
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (i == dot) continue;
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("malformed letter token: '" + tok + "'");
    }
    Letter x{std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1))};
    check_letter(x, n);
    items.push_back({x, sign});
  }
  return Word(n, std::move(items));
}

std::string format_word(const Word& w) {
  std::string out;
  for (const SignedLetter& s : w.items()) {
    if (!out.empty()) out += ' ';
    out += letter_token(s.letter);
    if (s.sign < 0) out += '!';
  }
  return out;
}

Letter phi_letter(int n, long k, Letter x) {
  check_strand_count(n);
  check_letter(x, n);
  long r = k % n;
  if (r < 0) r += n;
  if (r > n - r) {
    // shorter to go around backwards
    for (long i = 0; i < n - r; ++i)
      x = x.p >= 2 ? Letter{x.p - 1, x.q - 1} : Letter{x.q - 1, n};
  } else {
    for (long i = 0; i < r; ++i)
      x = x.q <= n - 1 ? Letter{x.p + 1, x.q + 1} : Letter{1, x.p + 1};
  }
  return x;
}

Word phi(int n, long k, const Word& w) {
  if (w.strand_count() > n)
    throw std::invalid_argument("word does not embed in strand count " +
                                std::to_string(n));
  std::vector<SignedLetter> items = w.items();
  for (SignedLetter& s : items) s.letter = phi_letter(n, k, s.letter);
  return Word(n, std::move(items));
}

Word mirror(const Word& w) {
  std::vector<SignedLetter> items(w.items().rbegin(), w.items().rend());
  return Word(w.strand_count(), std::move(items));
}

Word flip(int n, const Word& w) {
  if (w.strand_count() != n)
    throw std::invalid_argument("flip: strand count mismatch");
  if (!w.is_positive()) throw std::invalid_argument("flip: word must be positive");
  std::vector<SignedLetter> items;
  items.reserve(w.size());
  for (auto it = w.items().rbegin(); it != w.items().rend(); ++it)
    items.push_back({Letter{n + 1 - it->letter.q, n + 1 - it->letter.p}, +1});
  return Word(n, std::move(items));
}

Word inverse(const Word& w) {
  std::vector<SignedLetter> items;
  items.reserve(w.size());
  for (auto it = w.items().rbegin(); it != w.items().rend(); ++it)
    items.push_back({it->letter, -it->sign});
  return Word(w.strand_count(), std::move(items));
}

Word concat(const Word& u, const Word& v) {
  if (u.strand_count() != v.strand_count())
    throw std::invalid_argument("concat: strand count mismatch");
  std::vector<SignedLetter> items = u.items();
  items.insert(items.end(), v.items().begin(), v.items().end());
  return Word(u.strand_count(), std::move(items));
}

Word power(const Word& w, long times) {
  if (times < 0) throw std::invalid_argument("power: negative exponent");
  std::vector<SignedLetter> items;
  items.reserve(w.size() * static_cast<std::size_t>(times));
  for (long i = 0; i < times; ++i)
    items.insert(items.end(), w.items().begin(), w.items().end());
  return Word(w.strand_count(), std::move(items));
}

Word rewrap(const Word& w, int strand_count) {
  return Word(strand_count, w.items());
}

}  // namespace bkl
