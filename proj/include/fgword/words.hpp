// Reduced and cyclic word arithmetic over a finite ranked alphabet,
// plus the text grammar for words.
//
// Grammar:   word  := "1" | term*
//            term  := NAME exponent?
//            exponent := "^" ("-")? DIGITS
//            NAME  := single lowercase letter; an uppercase letter X is
//                     sugar for x^-1.
// Whitespace separates terms and is otherwise ignored.  The empty word
// prints as "1".

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("words belong to different alphabets") {}
};

// A finite set of free generators.  Names are nonempty strings of lowercase
// letters/digits; the text grammar additionally requires single-letter names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("alphabet rank must be at least 1");
    for (const auto& n : names_) {
      if (n.empty()) throw Error("generator names must be nonempty");
      for (char c : n)
        if (!(std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c))))
          throw Error("generator name '" + n + "' must use lowercase letters/digits");
    }
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw Error("generator names must be distinct");
  }

  size_t rank() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

// "a,b,c" -> alphabet of rank 3.
inline AlphabetRef alphabet_from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  names.push_back(cur);
  return make_alphabet(std::move(names));
}

inline bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  return a == b || (a && b && *a == *b);
}

// One signed generator.  Encoded as (gen << 1) | (negative ? 1 : 0); the
// byte order is exactly the letter order used for canonical rotations
// (generator index ascending, +1 before -1).
struct Letter {
  uint8_t code = 0;

  static Letter make(size_t gen, int sign) {
    return Letter{static_cast<uint8_t>((gen << 1) | (sign < 0 ? 1u : 0u))};
  }
  size_t gen() const { return code >> 1; }
  int sign() const { return (code & 1) ? -1 : +1; }
  Letter inverse() const { return Letter{static_cast<uint8_t>(code ^ 1u)}; }

  bool operator==(const Letter& o) const { return code == o.code; }
  bool operator!=(const Letter& o) const { return code != o.code; }
  bool operator<(const Letter& o) const { return code < o.code; }
};

namespace detail {

// Appends a letter to a reduced sequence, cancelling if possible.
inline void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

inline std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) push_reduced(out, l);
  return out;
}

}  // namespace detail

// A freely reduced word.  The empty sequence is the identity.  Immutable.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  Word(AlphabetRef alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(detail::free_reduce(letters)) {
    check_letters();
  }

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word& o) const {
    return letters_ == o.letters_ && same_alphabet(alphabet_, o.alphabet_);
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Raw byte key, usable as a hash/map key within one alphabet.
  std::string key() const {
    std::string k;
    k.reserve(letters_.size());
    for (Letter l : letters_) k.push_back(static_cast<char>(l.code));
    return k;
  }

  static Word from_key(const AlphabetRef& alphabet, const std::string& key) {
    std::vector<Letter> ls;
    ls.reserve(key.size());
    for (char c : key) ls.push_back(Letter{static_cast<uint8_t>(c)});
    return Word(alphabet, std::move(ls));
  }

 private:
  void check_letters() const {
    if (!alphabet_) return;
    for (Letter l : letters_)
      if (l.gen() >= alphabet_->rank()) throw Error("letter outside alphabet");
  }

  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

inline Word multiply(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  std::vector<Letter> out = u.letters();
  for (Letter l : v.letters()) detail::push_reduced(out, l);
  return Word(u.alphabet(), std::move(out));
}

inline Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(u.alphabet(), std::move(out));
}

// g u g^-1, reduced.
inline Word conjugate(const Word& g, const Word& u) {
  return multiply(multiply(g, u), invert(g));
}

inline std::vector<long> exponent_sums(const Word& u) {
  std::vector<long> sums(u.alphabet() ? u.alphabet()->rank() : 0, 0);
  for (Letter l : u.letters()) sums[l.gen()] += l.sign();
  return sums;
}

namespace detail {

// Lexicographically least rotation of a letter sequence (byte order).
inline std::vector<Letter> least_rotation(std::vector<Letter> v) {
  if (v.size() < 2) return v;
  const size_t n = v.size();
  size_t best = 0;
  for (size_t i = 1; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      uint8_t a = v[(best + k) % n].code, b = v[(i + k) % n].code;
      if (b < a) {
        best = i;
        break;
      }
      if (b > a) break;
    }
  }
  std::rotate(v.begin(), v.begin() + best, v.end());
  return v;
}

}  // namespace detail

// A cyclically reduced word in its canonical rotation.  Two conjugate words
// have identical CyclicWord forms, which makes this the dedup key for orbit
// sets and conjugacy comparisons.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

  // Canonicalizes an already cyclically reduced sequence.
  static CyclicWord from_cyclically_reduced(AlphabetRef alphabet, std::vector<Letter> ls) {
    CyclicWord c(std::move(alphabet));
    c.letters_ = detail::least_rotation(std::move(ls));
    return c;
  }

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word to_word() const { return Word(alphabet_, letters_); }

  bool operator==(const CyclicWord& o) const {
    return letters_ == o.letters_ && same_alphabet(alphabet_, o.alphabet_);
  }
  bool operator!=(const CyclicWord& o) const { return !(*this == o); }
  bool operator<(const CyclicWord& o) const {
    return std::lexicographical_compare(
        letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
        [](Letter a, Letter b) { return a.code < b.code; });
  }

  std::string key() const {
    std::string k;
    k.reserve(letters_.size());
    for (Letter l : letters_) k.push_back(static_cast<char>(l.code));
    return k;
  }

 private:
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

// Peels matching conjugating letters off both ends, then canonicalizes.
// Postcondition: u = conjugator * (some rotation of result) * conjugator^-1.
inline std::pair<CyclicWord, Word> cyclic_reduce(const Word& u) {
  std::vector<Letter> core = u.letters();
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {CyclicWord::from_cyclically_reduced(u.alphabet(), std::move(core)),
          Word(u.alphabet(), std::move(conj))};
}

inline bool conjugate_equal(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  return cyclic_reduce(u).first == cyclic_reduce(v).first;
}

// --- text grammar -----------------------------------------------------------

inline Word parse_word(const std::string& text, const AlphabetRef& alphabet) {
  for (size_t i = 0; i < alphabet->rank(); ++i)
    if (alphabet->name(i).size() != 1)
      throw Error("the word grammar requires single-letter generator names");

  auto letter_for = [&](char c, size_t pos) -> std::pair<size_t, int> {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto idx = alphabet->index_of(std::string(1, lower));
    if (!idx) throw ParseError(std::string("unknown generator '") + c + "'", pos);
    return {*idx, std::isupper(static_cast<unsigned char>(c)) ? -1 : +1};
  };

  std::vector<Letter> out;
  size_t i = 0;
  // Lone "1" denotes the identity.
  {
    size_t j = 0;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == '1') {
      size_t k = j + 1;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k == text.size()) return Word(alphabet);
    }
  }
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("expected a generator name", i);
    auto [gen, sign] = letter_for(c, i);
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed exponent", i);
      long mag = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) throw ParseError("exponent too large", i);
        ++i;
      }
      exponent = neg ? -mag : mag;
    }
    long total = static_cast<long>(sign) * exponent;
    Letter l = Letter::make(gen, total >= 0 ? +1 : -1);
    for (long k = 0; k < std::labs(total); ++k) detail::push_reduced(out, l);
  }
  return Word(alphabet, std::move(out));
}

// Canonical output: runs collapse to name^k, inverses use ^-k, terms are
// space separated, the identity prints as "1".
inline std::string format_word(const Word& u) {
  if (u.empty()) return "1";
  std::string out;
  const auto& ls = u.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    size_t run = j - i;
    if (!out.empty()) out += ' ';
    out += u.alphabet()->name(ls[i].gen());
    if (ls[i].sign() < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

inline std::string format_word(const CyclicWord& u) { return format_word(u.to_word()); }

}  // namespace fg
