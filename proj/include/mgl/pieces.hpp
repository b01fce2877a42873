// Pieces between cyclically reduced relators and the C'(lambda) condition.
//
// A piece is a word with two distinct occurrences among the cyclic
// conjugates of the relators and their inverses. Occurrences are counted
// on the cyclic words themselves: an occurrence is the set of cyclic
// positions it covers, so a full-period repeat of a periodic word is a
// single occurrence, while overlapping starts at different positions are
// distinct ones.
#pragma once

#include <optional>
#include <vector>

#include "mgl/rational.hpp"
#include "mgl/word.hpp"

namespace mgl {

// The cyclic words of r and r^-1, deduplicated (they can coincide as
// cyclic words). Families of two relators are either equal or disjoint.
class CyclicFamily {
 public:
  explicit CyclicFamily(const Word& w);

  const std::vector<std::vector<Letter>>& patterns() const { return patterns_; }
  std::size_t length() const { return patterns_.front().size(); }

  bool operator==(const CyclicFamily& other) const { return canon_ == other.canon_; }

 private:
  std::vector<std::vector<Letter>> patterns_;  // 1 or 2 cyclic words
  std::vector<Letter> canon_;                  // least rotation over all patterns
};

// Maximal piece length between u and v; when their conjugate families
// coincide, only subwords with two distinct occurrences count. Returns 0
// when there is no piece. Inputs must be cyclically reduced and nonempty.
int max_piece(const Word& u, const Word& v);

// Same, with a deterministic witness (longest piece, earliest occurrence).
std::optional<Word> max_piece_witness(const Word& u, const Word& v, int* length_out = nullptr);

struct CPrimeReport {
  bool ok;
  // On failure: an offending piece and the relator pair it lives on.
  Word witness;
  std::size_t i = 0;
  std::size_t j = 0;
  int piece_length = 0;
};

// C'(lambda): every piece p between relators satisfies
// |p| < lambda * min |r|. Exact rational comparison. Two relator slots
// carrying the same cyclic family fail the condition outright (the shared
// cyclic word is a full-length piece between distinct slots).
CPrimeReport check_c_prime(const std::vector<Word>& relators, const Rational& lambda);

}  // namespace mgl
