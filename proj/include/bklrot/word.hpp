#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bkl {

// Band generator a_{p,q} with 1 <= p < q. Ordered lexicographically by (p,q);
// this order is also the canonical letter order used for words.
struct Letter {
  int p = 1;
  int q = 2;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct SignedLetter {
  Letter letter;
  int sign = +1;  // +1 or -1
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

// A word over the generators a_{p,q}, q <= strand_count, possibly with
// inverted letters. Immutable after construction. The empty sequence is the
// empty word.
class Word {
 public:
  explicit Word(int strand_count);
  Word(int strand_count, std::vector<SignedLetter> items);
  Word(int strand_count, std::initializer_list<Letter> positive_letters);

  int strand_count() const { return n_; }
  const std::vector<SignedLetter>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool is_positive() const;
  const SignedLetter& front() const { return items_.front(); }
  const SignedLetter& back() const { return items_.back(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int n_;
  std::vector<SignedLetter> items_;
};

// All letters of strand count n in canonical order.
std::vector<Letter> letters(int n);

std::string letter_token(Letter x);  // "p.q"

// Grammar: tokens separated by one or more spaces, `p.q` for a_{p,q},
// `p.q!` for its inverse, empty string for the empty word.
Word parse_word(const std::string& text, int n);
std::string format_word(const Word& w);

// phi_n^k on letters and words (k may be negative; k = 0 is the identity).
Letter phi_letter(int n, long k, Letter x);
Word phi(int n, long k, const Word& w);

Word mirror(const Word& w);

// Anti-automorphism: reverse the word and send a_{p,q} to a_{n+1-q,n+1-p}.
// Turns left division questions into right division ones. Positive words only.
Word flip(int n, const Word& w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long times);  // times >= 0
Word rewrap(const Word& w, int strand_count);

}  // namespace bkl
