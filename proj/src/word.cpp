#include "gmm/word.hpp"

#include <cstdlib>

namespace gmm {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::incompatible_rank: return "incompatible-rank";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::contract_violation: return "contract-violation";
    case ErrorKind::action_undefined: return "action-undefined";
    case ErrorKind::window_exceeded: return "window-exceeded";
    case ErrorKind::cannot_approximate: return "cannot-approximate";
    case ErrorKind::invalid_axes: return "invalid-axes";
    case ErrorKind::malformed_code: return "malformed-code";
    case ErrorKind::no_witness: return "no-witness";
    case ErrorKind::precondition_unmet: return "precondition-unmet";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::load_error: return "load-error";
  }
  return "error";
}

char letter_char(Letter l) {
  int g = generator(l);
  int off = g - 1 + (g >= 5 ? 1 : 0);
  return static_cast<char>(l > 0 ? 'a' + off : 'A' + off);
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (char c : letters_) s.push_back(letter_char(static_cast<Letter>(c)));
  return s;
}

int compare_letters(LetterView x, LetterView y) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a = letter_order(static_cast<Letter>(x[i]));
    int b = letter_order(static_cast<Letter>(y[i]));
    if (a != b) return a < b ? -1 : 1;
  }
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (rank_ != o.rank_) return rank_ <=> o.rank_;
  int c = compare_letters(letters_, o.letters_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Word Word::from_reduced(int rank, LetterView letters) {
  Word w(rank);
  w.letters_.assign(letters.begin(), letters.end());
  return w;
}

static void check_letter(Letter l, int rank) {
  if (l == 0 || generator(l) > rank)
    throw Error(ErrorKind::malformed_input,
                "letter index " + std::to_string(static_cast<int>(l)) +
                    " out of range for rank " + std::to_string(rank));
}

Word reduce(int rank, const std::vector<Letter>& raw) {
  std::string out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l, rank);
    if (!out.empty() && static_cast<Letter>(out.back()) == inverse(l))
      out.pop_back();
    else
      out.push_back(static_cast<char>(l));
  }
  return Word::from_reduced(rank, out);
}

void concat_into(std::string& out, LetterView u, LetterView v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() &&
         static_cast<Letter>(u[u.size() - 1 - k]) == inverse(static_cast<Letter>(v[k])))
    ++k;
  out.assign(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
  out.append(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
}

static void same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw Error(ErrorKind::incompatible_rank, "words of rank " + std::to_string(u.rank()) +
                                                   " and " + std::to_string(v.rank()));
}

Word concat(const Word& u, const Word& v) {
  same_rank(u, v);
  std::string out;
  concat_into(out, u.view(), v.view());
  return Word::from_reduced(u.rank(), out);
}

Word invert(const Word& u) {
  std::string out;
  out.reserve(u.length());
  for (std::size_t i = u.length(); i-- > 0;) out.push_back(static_cast<char>(inverse(u[i])));
  return Word::from_reduced(u.rank(), out);
}

Word prefix(const Word& u, std::size_t k) {
  if (k > u.length())
    throw Error(ErrorKind::out_of_range, "prefix length " + std::to_string(k) +
                                             " exceeds length of " + u.str());
  return Word::from_reduced(u.rank(), u.view().substr(0, k));
}

Word power(const Word& u, long n) {
  Word base = n < 0 ? invert(u) : u;
  Word acc(u.rank());
  for (long i = 0; i < std::labs(n); ++i) acc = concat(acc, base);
  return acc;
}

std::vector<Letter> parse_letters(std::string_view text, int rank) {
  std::vector<Letter> out;
  if (text == "e") return out;
  for (char c : text) {
    Letter l = 0;
    if (c >= 'a' && c <= 'z' && c != 'e') {
      // 'e' is reserved for the identity, so generators skip it: a b c d f ...
      l = static_cast<Letter>(c - 'a' + 1 - (c > 'e' ? 1 : 0));
    } else if (c >= 'A' && c <= 'Z' && c != 'E') {
      l = static_cast<Letter>(-(c - 'A' + 1 - (c > 'E' ? 1 : 0)));
    } else {
      throw Error(ErrorKind::malformed_input, "bad letter '" + std::string(1, c) + "' in word \"" +
                                                  std::string(text) + "\"");
    }
    check_letter(l, rank);
    out.push_back(l);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) { return reduce(rank, parse_letters(text, rank)); }

bool is_reduced(const std::vector<Letter>& raw) {
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i] == inverse(raw[i - 1])) return false;
  return true;
}

std::vector<Run> runs(LetterView letters) {
  std::vector<Run> out;
  for (char c : letters) {
    Letter l = static_cast<Letter>(c);
    int g = generator(l);
    long s = l > 0 ? 1 : -1;
    if (!out.empty() && out.back().gen == g)
      out.back().exp += s;
    else
      out.push_back({g, s});
  }
  return out;
}

int alternations(LetterView letters) {
  int n = 0;
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (generator(static_cast<Letter>(letters[i])) != generator(static_cast<Letter>(letters[i - 1])))
      ++n;
  return n;
}

}  // namespace gmm
