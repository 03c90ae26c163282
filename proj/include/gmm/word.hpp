#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gmm/error.hpp"

namespace gmm {

// A signed generator index: +i is the i-th generator, -i its inverse.
using Letter = signed char;

// Letters are stored one per char so that words hash and compare as strings.
using LetterView = std::string_view;

struct Alphabet {
  int rank = 2;
};

inline Letter inverse(Letter l) { return static_cast<Letter>(-l); }
inline int generator(Letter l) { return l < 0 ? -l : l; }

// Position of a letter in the canonical order a < A < b < B < c < ...
inline int letter_order(Letter l) { return 2 * (generator(l) - 1) + (l < 0 ? 1 : 0); }

char letter_char(Letter l);

// Reduced word in F_rank. Immutable value; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }
  LetterView view() const { return letters_; }

  std::string str() const;

  bool operator==(const Word& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }
  std::strong_ordering operator<=>(const Word& o) const;

  // Trusted construction from letters already known to be reduced.
  static Word from_reduced(int rank, LetterView letters);

 private:
  int rank_ = 2;
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string_view>{}(w.view()) ^ static_cast<std::size_t>(w.rank());
  }
};

// Lexicographic comparison of letter sequences in the canonical letter order.
int compare_letters(LetterView x, LetterView y);

Word reduce(int rank, const std::vector<Letter>& raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word prefix(const Word& u, std::size_t k);
Word power(const Word& u, long n);

// Concatenation of reduced letter strings into `out`, reducing at the seam.
void concat_into(std::string& out, LetterView u, LetterView v);

// Text syntax: a,b,c... generators, A,B,C... inverses, "e" the identity.
std::vector<Letter> parse_letters(std::string_view text, int rank);
Word parse_word(std::string_view text, int rank = 2);

bool is_reduced(const std::vector<Letter>& raw);

// Maximal runs of a single letter: "aabA" -> (a,2),(b,1),(a,-1).
struct Run {
  int gen;
  long exp;
};
std::vector<Run> runs(LetterView letters);

// Number of changes between generator families along the word.
int alternations(LetterView letters);

}  // namespace gmm
