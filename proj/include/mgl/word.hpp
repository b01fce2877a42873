// Freely reduced words over the free group on m generators.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mgl {

// +i is the i-th generator (1-based), -i its inverse. m <= 26 so the
// a..z / A..Z text form stays one character per letter.
using Letter = std::int8_t;

inline constexpr int kMaxGenerators = 26;

constexpr Letter inverse(Letter x) { return static_cast<Letter>(-x); }

// Rank in the canonical letter order a < a^-1 < b < b^-1 < ...
constexpr int letter_rank(Letter x) {
  int i = x > 0 ? x : -x;
  return 2 * (i - 1) + (x < 0 ? 1 : 0);
}

Letter letter_from_rank(int rank);

// A freely reduced word; the empty word is the identity. Construction
// goes through free reduction, so the no-adjacent-inverse invariant
// always holds.
class Word {
 public:
  Word() = default;

  // Frees the raw sequence of adjacent x x^-1 pairs.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw);

  // Wraps a sequence already known to be reduced (checked).
  static Word from_reduced(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  bool cyclically_reduced() const;

  bool operator==(const Word&) const = default;

  friend Word operator*(const Word& a, const Word& b);  // freely reduced product

 private:
  std::vector<Letter> letters_;
};

// Canonical (length, then letter-rank lexicographic) order; this is the
// order all enumerations and fingerprints use.
bool word_less(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Strips conjugating letters until the first letter is no longer the
// inverse of the last.
Word cyclic_reduce(const Word& w);

// Rotation by i: w[i..] w[..i]. Requires a cyclically reduced word so the
// result is again reduced.
Word cyclic_rotation(const Word& w, std::size_t i);

// Validates letters against the alphabet size.
void check_alphabet(std::span<const Letter> letters, int m);

// Text form: lowercase = generator, uppercase = inverse, "1" or "" =
// identity, whitespace ignored.
Word parse_word(std::string_view text, int m);
std::vector<Letter> parse_letters(std::string_view text, int m);  // unreduced
std::string format_word(const Word& w);
std::string format_letters(std::span<const Letter> letters);

}  // namespace mgl
