// UR(n): normal closures of q-th powers of cyclically reduced roots.
// Membership goes through the Newman threshold; counting dedupes roots by
// cyclic conjugacy and inversion.
#pragma once

#include <cstdint>
#include <vector>

#include "mgl/dehn.hpp"
#include "mgl/word.hpp"

namespace mgl {

// Partition of cyclically reduced words under rotation and inversion.
// Class representatives are canonical (least word in canonical order);
// classes are listed by representative order.
struct CyclicClass {
  Word representative;
  std::vector<Word> members;
};

std::vector<CyclicClass> cyclic_classes(const std::vector<Word>& words);

struct UrDimRow {
  int n;
  int root_len;                  // floor(n/q); 0 marks an empty row
  std::uint64_t cyc_roots;       // |cyc(root_len)|
  std::uint64_t classes;         // root classes under rotation/inversion
  double fiber_bound;            // 2 * root_len
  double lower_certificate;      // cyc_roots / fiber_bound
  std::int64_t exact_fps;        // fingerprint-dedup count over classes, -1 unknown
  double s_classes;              // log2(classes)/n
  double s_exact;
};

struct UrDimResult {
  int m, q, n_min, n_max;
  double dim_lower;  // log2(2m-1)/q
  double dim_upper;  // log2(2m-1)/(q-1)
  std::vector<UrDimRow> rows;
};

// exact_cap: largest class count for which closures are fingerprinted.
UrDimResult ur_dimension_experiment(int m, int q, int n_min, int n_max,
                                    std::uint64_t budget = kDefaultBudget,
                                    std::uint64_t exact_cap = 4096, int threads = 1);

}  // namespace mgl
