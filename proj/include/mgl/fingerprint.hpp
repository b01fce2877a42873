// Ball fingerprints (membership bitmaps in canonical ball order), the
// 2^-valuation ultrametric on them, covering numbers and dimension-estimate
// sequences.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgl/word.hpp"

namespace mgl {

// Membership bitmap of a set restricted to the radius-n ball. Bit i is the
// i-th element of the canonical enumeration (words: length-then-lex;
// lattice points: norm-then-lex). prefix_counts[r] = number of elements of
// radius <= r, so restriction to a smaller radius is a bitmap prefix.
class BallFingerprint {
 public:
  BallFingerprint() = default;
  BallFingerprint(int m, int n, std::vector<std::uint64_t> prefix_counts);

  int m() const { return m_; }
  int radius() const { return n_; }
  std::uint64_t count() const { return prefix_counts_.back(); }
  const std::vector<std::uint64_t>& prefix_counts() const { return prefix_counts_; }

  bool test(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i, bool value = true);

  // Raw 64-bit blocks; unused tail bits are kept zero.
  const std::vector<std::uint64_t>& blocks() const { return bits_; }
  std::uint64_t* data() { return bits_.data(); }

  std::uint64_t popcount() const;

  // Restriction to a smaller radius (bitmap prefix).
  BallFingerprint restricted(int radius) const;
  bool prefix_equal(const BallFingerprint& other, int radius) const;

  bool operator==(const BallFingerprint& other) const;

  // Canonical serialized form (for dedup keys).
  std::string key() const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> prefix_counts_;  // size n_+1
  std::vector<std::uint64_t> bits_;
};

struct FingerprintHash {
  std::size_t operator()(const BallFingerprint& f) const;
};

// nu(A,B): largest r with equal radius-r restrictions. `agree_through_probe`
// means the fingerprints are equal on the whole common radius (the exact
// valuation may be larger); value -1 means they differ already at radius 0.
struct Valuation {
  int probe;
  bool agree_through_probe;
  int value;  // meaningful when !agree_through_probe

  bool operator==(const Valuation&) const = default;
};

Valuation valuation(const BallFingerprint& a, const BallFingerprint& b);

// d = 2^-nu as a dyadic rational, kept in exponent form. When the sets
// agree through the probe radius the distance is only known to be
// <= 2^-probe.
struct DyadicDistance {
  bool upper_bound;  // true: d <= 2^-exponent; false: d == 2^-exponent
  int exponent;

  double to_double() const;
  bool operator==(const DyadicDistance&) const = default;
};

DyadicDistance distance(const BallFingerprint& a, const BallFingerprint& b);

// Number of distinct radius-n restrictions in the family. In a compact
// ultrametric space this single count is both the covering number
// N(E,2^-n) and the packing number P(E,2^-n).
std::uint64_t covering_number(const std::vector<BallFingerprint>& family, int n);

// Dimension-estimate sequence s_n = log2(N_n)/n with a trailing-window
// min/max standing in for liminf/limsup (finite-window estimate; the
// default window is the top half of the computed range).
struct DimEstimate {
  struct Row {
    int n;
    std::uint64_t count;
    double s;
  };
  std::vector<Row> rows;
  int window = 0;        // number of trailing rows summarized
  double liminf_est = 0;  // min of s over the window
  double limsup_est = 0;  // max of s over the window
};

DimEstimate dim_sequence(const std::vector<std::pair<int, std::uint64_t>>& counts,
                         int window = 0);

// Exact growth table from the closed-form ball sizes.
struct GrowthRow {
  int n;
  std::uint64_t beta;
  std::uint64_t sigma;      // beta(n+1) - beta(n)
  double beta_over_n;
  double beta_root;         // beta(n)^(1/n)
};

std::vector<GrowthRow> growth_stats(int m, int n_max, std::uint64_t budget);

// beta(0..n) for the free-group ball (m >= 2).
std::vector<std::uint64_t> word_prefix_counts(int m, int n);

// Membership bitmap of a predicate over the radius-n word ball. With
// threads > 1 the ball is sharded by first letter; results are
// schedule-independent since every word owns a fixed bit index.
BallFingerprint ball_membership_fingerprint(int m, int n,
                                            const std::function<bool(const Word&)>& member,
                                            std::uint64_t budget, int threads = 1);

// Fingerprint family file format: header "m n beta", then one hex-encoded
// bitmap per line (bit i in hex digit i/4, most significant bit first
// within the digit).
void write_fingerprints(std::ostream& os, const std::vector<BallFingerprint>& family);
std::vector<BallFingerprint> read_fingerprints(std::istream& is);

std::string to_hex(const BallFingerprint& f);

}  // namespace mgl
