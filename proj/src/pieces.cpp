#include "mgl/pieces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace mgl {

namespace {

std::vector<Letter> to_letters(const Word& w) {
  return {w.letters().begin(), w.letters().end()};
}

std::string min_rotation(const std::vector<Letter>& p) {
  std::string best;
  for (std::size_t o = 0; o < p.size(); ++o) {
    std::string rot;
    rot.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
      rot.push_back(static_cast<char>(p[(o + j) % p.size()]));
    if (o == 0 || rot < best) best = rot;
  }
  return best;
}

// Reads l letters of the cyclic word p starting at offset o.
std::string read_cyclic(const std::vector<Letter>& p, std::size_t o, std::size_t l) {
  std::string s;
  s.reserve(l);
  for (std::size_t j = 0; j < l; ++j) s.push_back(static_cast<char>(p[(o + j) % p.size()]));
  return s;
}

struct Occurrence {
  std::size_t pattern;
  std::size_t offset;
};

// Distinct occurrences cover distinct cyclic position sets; a full-turn
// read covers every position, so same-pattern repeats only count below the
// pattern length.
bool distinct_occurrences(const Occurrence& a, const Occurrence& b, std::size_t l,
                          std::size_t pattern_len) {
  if (a.pattern != b.pattern) return true;
  return a.offset != b.offset && l < pattern_len;
}

// Longest self piece within one family; returns length and witness.
int max_self_piece(const CyclicFamily& f, std::string* witness) {
  std::size_t L = f.length();
  for (std::size_t l = L; l >= 1; --l) {
    std::unordered_map<std::string, Occurrence> seen;
    for (std::size_t p = 0; p < f.patterns().size(); ++p) {
      for (std::size_t o = 0; o < L; ++o) {
        std::string s = read_cyclic(f.patterns()[p], o, l);
        auto [it, inserted] = seen.try_emplace(s, Occurrence{p, o});
        if (!inserted && distinct_occurrences(it->second, {p, o}, l, L)) {
          if (witness) *witness = s;
          return static_cast<int>(l);
        }
      }
    }
  }
  return 0;
}

int max_cross_piece(const CyclicFamily& fu, const CyclicFamily& fv, std::string* witness) {
  std::size_t top = std::min(fu.length(), fv.length());
  for (std::size_t l = top; l >= 1; --l) {
    std::unordered_set<std::string> from_u;
    for (const auto& p : fu.patterns())
      for (std::size_t o = 0; o < fu.length(); ++o) from_u.insert(read_cyclic(p, o, l));
    for (const auto& p : fv.patterns()) {
      for (std::size_t o = 0; o < fv.length(); ++o) {
        std::string s = read_cyclic(p, o, l);
        if (from_u.count(s)) {
          if (witness) *witness = s;
          return static_cast<int>(l);
        }
      }
    }
  }
  return 0;
}

Word word_from_key(const std::string& s) {
  std::vector<Letter> letters;
  letters.reserve(s.size());
  for (char c : s) letters.push_back(static_cast<Letter>(c));
  return Word::reduce(letters);  // cyclic subwords of reduced words are reduced
}

void require_relator(const Word& w) {
  if (w.empty()) throw std::invalid_argument("relator must be nonempty");
  if (!w.cyclically_reduced()) throw std::invalid_argument("relator must be cyclically reduced");
}

}  // namespace

CyclicFamily::CyclicFamily(const Word& w) {
  require_relator(w);
  std::vector<Letter> fwd = to_letters(w);
  std::vector<Letter> inv = to_letters(w.inverse());
  patterns_.push_back(fwd);
  std::string cf = min_rotation(fwd), ci = min_rotation(inv);
  if (cf != ci) patterns_.push_back(inv);
  canon_ = {};
  const std::string& least = std::min(cf, ci);
  for (char c : least) canon_.push_back(static_cast<Letter>(c));
}

int max_piece(const Word& u, const Word& v) {
  int len = 0;
  max_piece_witness(u, v, &len);
  return len;
}

std::optional<Word> max_piece_witness(const Word& u, const Word& v, int* length_out) {
  CyclicFamily fu(u), fv(v);
  std::string witness;
  int len = (fu == fv) ? max_self_piece(fu, &witness) : max_cross_piece(fu, fv, &witness);
  if (length_out) *length_out = len;
  if (len == 0) return std::nullopt;
  return word_from_key(witness);
}

CPrimeReport check_c_prime(const std::vector<Word>& relators, const Rational& lambda) {
  if (relators.empty()) throw std::invalid_argument("check_c_prime needs at least one relator");
  if (lambda.num <= 0) throw std::invalid_argument("lambda must be positive");
  std::vector<CyclicFamily> families;
  families.reserve(relators.size());
  std::int64_t min_len = relators.front().size();
  for (const auto& r : relators) {
    require_relator(r);
    families.emplace_back(r);
    min_len = std::min<std::int64_t>(min_len, r.size());
  }
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (std::size_t j = i; j < relators.size(); ++j) {
      std::string witness;
      int len;
      if (i != j && families[i] == families[j]) {
        // Same cyclic word in two slots: the whole word is a piece.
        len = static_cast<int>(relators[i].size());
        witness.assign(relators[i].letters().begin(), relators[i].letters().end());
      } else if (i == j) {
        len = max_self_piece(families[i], &witness);
      } else {
        len = max_cross_piece(families[i], families[j], &witness);
      }
      if (len > 0 && !length_below(len, lambda, min_len))
        return CPrimeReport{false, word_from_key(witness), i, j, len};
    }
  }
  return CPrimeReport{true, Word{}, 0, 0, 0};
}

}  // namespace mgl
