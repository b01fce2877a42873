#include "mgl/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mgl {

Letter letter_from_rank(int rank) {
  int i = rank / 2 + 1;
  return static_cast<Letter>(rank % 2 == 0 ? i : -i);
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (Letter x : raw) {
    if (x == 0) throw std::invalid_argument("letter index 0 is not a letter");
    if (!w.letters_.empty() && w.letters_.back() == mgl::inverse(x))
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word Word::reduce(std::initializer_list<Letter> raw) {
  return reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

Word Word::from_reduced(std::vector<Letter> letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == mgl::inverse(letters[i + 1]))
      throw std::invalid_argument("sequence is not freely reduced");
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& x : inv) x = mgl::inverse(x);
  Word w;
  w.letters_ = std::move(inv);  // reversal of a reduced word is reduced
  return w;
}

bool Word::cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != mgl::inverse(letters_.back());
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.letters_.begin(), a.letters_.end());
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(raw);
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w.letters()) {
    h ^= static_cast<unsigned char>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Word cyclic_reduce(const Word& w) {
  std::span<const Letter> s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == inverse(s[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word::from_reduced({s.begin() + lo, s.begin() + hi});
}

Word cyclic_rotation(const Word& w, std::size_t i) {
  if (!w.cyclically_reduced())
    throw std::invalid_argument("rotation requires a cyclically reduced word");
  if (w.empty()) return w;
  i %= w.size();
  std::vector<Letter> rot;
  rot.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) rot.push_back(w[(i + j) % w.size()]);
  return Word::from_reduced(std::move(rot));
}

void check_alphabet(std::span<const Letter> letters, int m) {
  if (m < 1 || m > kMaxGenerators)
    throw std::invalid_argument("generator count out of range");
  for (Letter x : letters) {
    int i = x > 0 ? x : -x;
    if (i < 1 || i > m) throw std::invalid_argument("letter index out of range");
  }
}

std::vector<Letter> parse_letters(std::string_view text, int m) {
  std::vector<Letter> out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') continue;
    int i;
    bool inv;
    if (c >= 'a' && c <= 'z') {
      i = c - 'a' + 1;
      inv = false;
    } else if (c >= 'A' && c <= 'Z') {
      i = c - 'A' + 1;
      inv = true;
    } else {
      throw std::invalid_argument(std::string("bad character in word: ") + c);
    }
    out.push_back(static_cast<Letter>(inv ? -i : i));
  }
  check_alphabet(out, m);
  return out;
}

Word parse_word(std::string_view text, int m) {
  auto raw = parse_letters(text, m);
  return Word::reduce(raw);
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string s;
  s.reserve(letters.size());
  for (Letter x : letters)
    s.push_back(x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
  return s;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

}  // namespace mgl
