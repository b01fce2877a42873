// ps(n): k-tuples of cyclically reduced length-n words satisfying
// C'(lambda), their density, and the dimension experiment for the space of
// their normal closures.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgl/dehn.hpp"
#include "mgl/enumerate.hpp"
#include "mgl/pieces.hpp"
#include "mgl/rational.hpp"
#include "mgl/word.hpp"

namespace mgl {

struct PsCount {
  std::uint64_t tuples_total;  // |cyc(n)|^k
  std::uint64_t count;         // |ps(n)|
};

// Exhaustive count; optionally collects the tuples. k = 0 counts the one
// empty tuple. Enumeration cost |cyc(n)|^k is budget-checked.
PsCount enumerate_ps(int m, int k, const Rational& lambda, int n,
                     std::uint64_t budget = kDefaultBudget,
                     std::vector<std::vector<Word>>* tuples = nullptr);

// Seeded rejection sampling of the C'(lambda) density over cyc(n)^k.
struct PsDensity {
  std::uint64_t samples;
  std::uint64_t hits;
  double estimate;   // hits / samples
  double std_error;  // sqrt(p(1-p)/samples)
  std::uint64_t seed;
};

PsDensity sample_ps_density(int m, int k, const Rational& lambda, int n, std::uint64_t samples,
                            std::uint64_t seed);

// Whether a tuple lies in ps(n) (all entries cyclically reduced, common
// length n, C'(lambda) as a family).
bool in_ps(const std::vector<Word>& tuple, const Rational& lambda);

// Deterministic seeded search for single relators satisfying C'(lambda):
// uniform cyclically reduced words with lengths cycling over
// [len_min, len_max] until `count` hits are found.
std::vector<Word> find_cprime_relators(int m, const Rational& lambda, int len_min, int len_max,
                                       std::size_t count, std::uint64_t seed,
                                       std::uint64_t max_trials = 10'000'000);

struct PsDimRow {
  int n;
  std::uint64_t cyc_n;          // |cyc(n)|
  std::uint64_t ps_n;           // |ps(n)|
  double fiber_bound;           // k! (2n)^k
  double lower_certificate;     // |ps(n)| / fiber_bound
  std::int64_t exact_closures;  // fingerprint-dedup count, -1 when not affordable
  double s_tuples;              // log2 |ps(n)| / n, NaN when ps(n) empty
  double s_exact;               // log2(exact_closures) / n, NaN when unknown/empty
};

struct PsDimResult {
  int m, k, n_min, n_max;
  Rational lambda;
  double dim_lower;  // k log2(2m-1)
  double dim_upper;  // k/(1-3 lambda) log2(2m-1)
  std::vector<PsDimRow> rows;
};

// exact_cap: largest |ps(n)| for which closures are fingerprint-deduped.
PsDimResult ps_dimension_experiment(int m, int k, const Rational& lambda, int n_min, int n_max,
                                    std::uint64_t budget = kDefaultBudget,
                                    std::uint64_t exact_cap = 4096, int threads = 1);

}  // namespace mgl
