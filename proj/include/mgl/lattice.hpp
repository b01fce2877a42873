// Z^m under the l1 norm: balls, Hermite-normal-form subgroups, exact
// covering numbers of the space of subgroups, and the dimension table.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"

namespace mgl {

using LatticePoint = std::vector<std::int64_t>;

// |{x in Z^m : sum |x_i| <= n}| = sum_l 2^l C(m,l) C(n,l).
std::uint64_t l1_ball_count(int m, int n);

// All points of l1 norm <= n in canonical (norm, then lexicographic) order.
std::vector<LatticePoint> l1_ball(int m, int n, std::uint64_t budget = kDefaultBudget);

// A subgroup of Z^m in row Hermite normal form: row echelon, positive
// pivots, entries above each pivot reduced modulo it, no zero rows. Two
// subgroups are equal iff their HNF rows are identical.
struct HNFMatrix {
  int m = 0;
  std::vector<std::vector<std::int64_t>> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool operator==(const HNFMatrix&) const = default;
  std::string key() const;
};

HNFMatrix hnf(const std::vector<LatticePoint>& generators, int m);

// Membership by solving the triangular system over Z.
bool hnf_contains(const HNFMatrix& h, const LatticePoint& p);

// Bitmap of ball points lying in the subgroup, over the l1_ball order.
BallFingerprint subgroup_fingerprint(const HNFMatrix& h, int n,
                                     std::uint64_t budget = kDefaultBudget);

std::vector<std::uint64_t> lattice_prefix_counts(int m, int n);

// Exact |{B(n) ∩ R : R <= Z^m}|, computed by closing the set of
// ball-generated subgroups under adjoining ball points and deduplicating
// fingerprints. Exhaustive only for m <= 2 at desk scale; for larger m the
// binomial-sum upper bound is returned instead with exact=false.
struct ZmCover {
  bool exact;
  std::uint64_t value;
  std::uint64_t subgroups = 0;  // distinct HNFs visited (exact mode)
};

ZmCover covering_number_Zm(int m, int n, std::uint64_t budget = kDefaultBudget);

// sum_{l=0}^m C(b_n, l), the subgroup-basis counting bound.
std::uint64_t zm_cover_bound(int m, int n);

struct ZmDimRow {
  int n;
  std::uint64_t b_n;
  bool exact;
  std::uint64_t count;      // exact N or the bound
  std::uint64_t bound;
  double s_n;               // log2(count)/n
  double bn_over_nm;        // b_n / n^m, approaches 2^m/m!
};

std::vector<ZmDimRow> zm_dimension_experiment(int m, int n_min, int n_max,
                                              std::uint64_t budget = kDefaultBudget);

}  // namespace mgl
