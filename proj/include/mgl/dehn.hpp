// Dehn-style membership for normal closures. Small-cancellation relators
// use the Greendlinger threshold (1-3*lambda)|r|; one-relator q-th powers
// use the Newman threshold (q-1)|r|. Both thresholds exceed half the
// effective relator, so every replacement shortens the word and iteration
// terminates.
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"
#include "mgl/pieces.hpp"
#include "mgl/rational.hpp"
#include "mgl/word.hpp"

namespace mgl {

struct SmallCancelMode {
  Rational lambda;  // in (0, 1/6]
};

struct OneRelatorPowerMode {
  int q;  // >= 2; the effective relator is root^q
};

// A relator family with the mode that drives its Dehn threshold.
// Invariants: relators cyclically reduced and nonempty; small-cancellation
// mode implies C'(lambda) holds; power mode holds a single root.
struct Presentation {
  int m = 0;
  std::vector<Word> relators;  // power mode: the single root
  std::variant<SmallCancelMode, OneRelatorPowerMode> mode;

  static Presentation small_cancellation(int m, std::vector<Word> relators, Rational lambda);
  static Presentation one_relator_power(int m, Word root, int q);

  bool is_small_cancellation() const {
    return std::holds_alternative<SmallCancelMode>(mode);
  }
};

// One replacement: the subword of length `replaced_length` at `position`
// matched the prefix of a cyclic conjugate of the effective relator
// `relator` and was replaced by the inverse of the complement.
// conjugate_offset in [0, |R|) rotates R itself, in [|R|, 2|R|) rotates
// R^-1 (by offset - |R|).
struct DehnStep {
  std::uint32_t position;
  std::uint32_t relator;
  std::uint32_t conjugate_offset;
  std::uint32_t replaced_length;
};

struct DehnResult {
  bool member;
  std::vector<DehnStep> steps;  // the reduction trace (certificate when member)
};

// Iterated replacement: pick the longest qualifying subword (leftmost,
// then lowest relator index on ties), replace, freely reduce; accept iff
// the empty word is reached.
DehnResult dehn_member(const Word& w, const Presentation& p);

// Newman membership in <<root^q>>; equivalent to dehn_member on a power
// presentation, provided for the one-relator call sites.
DehnResult newman_member(const Word& w, const Word& root, int q);

// Replays a trace step by step, checking each replacement against the
// presentation's patterns and threshold. Returns true iff every step is
// valid and the final word is empty. A sound acceptance certificate for
// w's membership, checkable without trusting the search.
bool replay_trace(const Word& w, const Presentation& p, const std::vector<DehnStep>& steps);

// Bitmap of dehn_member over every word of length <= n.
BallFingerprint closure_fingerprint(const Presentation& p, int n,
                                    std::uint64_t budget = kDefaultBudget, int threads = 1);

}  // namespace mgl
