// The Gamma rewriting system on {a,b,c,d}, the parity substitutions, and
// the oracle membership algorithm for the groups S~_omega, together with
// the finite experiments on the Cantor family they parameterize.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"
#include "mgl/word.hpp"

namespace mgl {
namespace grig {

inline constexpr int kAlphabet = 4;  // a, b, c, d = letters 1..4

// Images of (b, c, d) under one oracle symbol; each entry is the letter
// 'a' or the empty word.
struct OracleTriple {
  std::array<bool, 3> to_a;  // true: maps to a; false: maps to the empty word

  bool operator==(const OracleTriple&) const = default;
};

// 0 -> (a,a,1), 1 -> (a,1,a), 2 -> (1,a,a).
OracleTriple triple_for_symbol(int symbol);

// A sequence over {0,1,2} given by an explicit prefix and an eventually
// repeated tail symbol. Text form "012(0)*"; without a tail marker the
// last prefix symbol repeats.
struct OracleSeq {
  std::vector<std::uint8_t> prefix;  // nonempty
  std::uint8_t tail;

  int symbol(std::size_t k) const {  // 1-based
    return k <= prefix.size() ? prefix[k - 1] : tail;
  }
  OracleTriple triple(std::size_t k) const { return triple_for_symbol(symbol(k)); }

  static OracleSeq parse(const std::string& text);
  std::string str() const;

  bool operator==(const OracleSeq&) const = default;
};

// Reduced positive form r(w): apply x^-1 -> x, xx -> 1 and xy -> z
// ({x,y,z} = {b,c,d}) until no rule fires. Empty output means w = 1 in
// Gamma. Input may be any word over the four letters and their inverses.
Word gamma_reduce(std::span<const Letter> raw);
Word gamma_reduce(const Word& w);

// Letter-wise substitution: a always drops; b, c, d map through the triple
// when the parity of the number of preceding a's equals i, and stay put
// otherwise. Requires a positive word with an even number of a's.
Word phi(const Word& w, int i, const OracleTriple& t);

struct MembershipVerdict {
  enum class Rule { odd_exponent_sum, reduced_to_identity, single_letter, split };

  struct Node {
    Word word;       // the word examined at this node
    int depth;       // root = 1; phi at depth d uses the d-th oracle symbol
    Rule rule;
    int parent;      // -1 for the root
    bool accepted;
  };

  bool accepted;
  std::vector<Node> nodes;  // preorder
};

// Oracle algorithm: reject on odd a-exponent sum, Gamma-reduce, accept on
// the empty word, reject on a single letter, otherwise recurse on both
// substitution branches with the next oracle symbol; acceptance requires
// both branches to accept.
MembershipVerdict member(const Word& w, const OracleSeq& omega);

// Membership bitmap over all reduced words of F(a,b,c,d) of length <= L.
BallFingerprint fingerprint_S(const OracleSeq& omega, int L,
                              std::uint64_t budget = kDefaultBudget, int threads = 1);

struct Prop62Report {
  int n;
  int agree_prefix;        // longest common prefix within the first n symbols
  // Prefixes agree on n symbols: fingerprints must coincide up to 2^n.
  bool part_i_applies;
  bool fingerprints_equal;
  int checked_radius;
  // Prefixes differ within n symbols: a separating word of length at most
  // 2^(n+2) must exist; reported when found within budget.
  bool part_ii_applies;
  bool separated;
  std::optional<Word> separating_word;
  int search_radius;       // radius actually searched
  bool search_complete;    // search covered the full 2^(n+2) radius
};

Prop62Report verify_prop62(const OracleSeq& omega1, const OracleSeq& omega2, int n,
                           std::uint64_t budget = kDefaultBudget, int threads = 1);

struct CoverEstimate {
  int n;
  std::uint64_t bound;          // 3^n
  int radius;                   // 2^n
  std::uint64_t centers;        // center sequences examined
  std::int64_t observed;        // distinct fingerprints among them, -1 if unaffordable
};

// Centers are the oracle sequences constant from the n-th coordinate on;
// their fingerprints at radius 2^n realize the covering of the family.
CoverEstimate covering_estimate_B(int n, std::uint64_t budget = kDefaultBudget, int threads = 1);

}  // namespace grig
}  // namespace mgl
