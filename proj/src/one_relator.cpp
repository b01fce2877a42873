#include "mgl/one_relator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "mgl/enumerate.hpp"

namespace mgl {

namespace {

Word class_key(const Word& w) {
  // Least element of the rotation+inversion orbit in canonical order.
  Word best = w;
  for (const Word& c : cyclic_conjugates(w, true))
    if (word_less(c, best)) best = c;
  return best;
}

}  // namespace

std::vector<CyclicClass> cyclic_classes(const std::vector<Word>& words) {
  std::map<Word, std::vector<Word>, WordLess> buckets;
  for (const Word& w : words) {
    if (!w.cyclically_reduced())
      throw std::invalid_argument("cyclic_classes requires cyclically reduced words");
    buckets[class_key(w)].push_back(w);
  }
  std::vector<CyclicClass> out;
  out.reserve(buckets.size());
  for (auto& [rep, members] : buckets) out.push_back({rep, std::move(members)});
  return out;
}

UrDimResult ur_dimension_experiment(int m, int q, int n_min, int n_max, std::uint64_t budget,
                                    std::uint64_t exact_cap, int threads) {
  if (q < 2) throw std::invalid_argument("ur_dimension_experiment requires q >= 2");
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
  UrDimResult res;
  res.m = m;
  res.q = q;
  res.n_min = n_min;
  res.n_max = n_max;
  double log2q = std::log2(2.0 * m - 1.0);
  res.dim_lower = log2q / q;
  res.dim_upper = log2q / (q - 1);

  for (int n = n_min; n <= n_max; ++n) {
    UrDimRow row{};
    row.n = n;
    row.root_len = n / q;
    row.exact_fps = -1;
    row.s_classes = std::numeric_limits<double>::quiet_NaN();
    row.s_exact = std::numeric_limits<double>::quiet_NaN();
    if (row.root_len >= 1) {
      std::vector<Word> roots = enumerate_cyc(m, row.root_len, budget);
      auto classes = cyclic_classes(roots);
      row.cyc_roots = roots.size();
      row.classes = classes.size();
      row.fiber_bound = 2.0 * row.root_len;
      row.lower_certificate = roots.size() / row.fiber_bound;
      row.s_classes = std::log2(static_cast<double>(classes.size())) / n;
      if (classes.size() <= exact_cap) {
        std::unordered_set<std::string> fps;
        for (const auto& cls : classes) {
          Presentation p = Presentation::one_relator_power(m, cls.representative, q);
          fps.insert(closure_fingerprint(p, n, budget, threads).key());
        }
        row.exact_fps = static_cast<std::int64_t>(fps.size());
        row.s_exact = std::log2(static_cast<double>(fps.size())) / n;
      }
    }
    res.rows.push_back(row);
  }
  return res;
}

}  // namespace mgl
