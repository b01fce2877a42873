#include "mgl/ps.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace mgl {

namespace {

// Smallest piece length that already violates C'(lambda) at relator
// length n, i.e. the least t with t >= lambda * n.
int violation_length(const Rational& lambda, int n) {
  return static_cast<int>((lambda.num * n + lambda.den - 1) / lambda.den);
}

// C'(lambda)-compatibility of a new entry against itself and the tuple so
// far, probing only the threshold length (pieces are downward closed).
bool compatible(const std::vector<Word>& tuple, std::size_t upto, const Word& next,
                const Rational& lambda, int n) {
  int t = violation_length(lambda, n);
  if (t <= 0) return false;
  if (t <= n && max_piece(next, next) >= t) return false;
  CyclicFamily fnext(next);
  for (std::size_t i = 0; i < upto; ++i) {
    if (CyclicFamily(tuple[i]) == fnext) return false;  // duplicate cyclic word
    if (t <= n && max_piece(tuple[i], next) >= t) return false;
  }
  return true;
}

std::uint64_t checked_pow_u64(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("tuple count overflow");
    r *= base;
  }
  return r;
}

Word random_cyc_word(int m, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> first(0, 2 * m - 1);
  std::uniform_int_distribution<int> step(0, 2 * m - 2);
  for (;;) {
    std::vector<Letter> w;
    w.reserve(n);
    w.push_back(letter_from_rank(first(rng)));
    for (int i = 1; i < n; ++i) {
      int r = step(rng);
      // skip the rank of the inverse of the previous letter
      int banned = letter_rank(inverse(w.back()));
      if (r >= banned) ++r;
      w.push_back(letter_from_rank(r));
    }
    if (n < 2 || w.front() != inverse(w.back())) return Word::from_reduced(std::move(w));
  }
}

}  // namespace

bool in_ps(const std::vector<Word>& tuple, const Rational& lambda) {
  if (tuple.empty()) return true;
  int n = static_cast<int>(tuple.front().size());
  for (const Word& w : tuple)
    if (static_cast<int>(w.size()) != n || !w.cyclically_reduced() || w.empty()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (!compatible(tuple, i, tuple[i], lambda, n)) return false;
  return true;
}

PsCount enumerate_ps(int m, int k, const Rational& lambda, int n, std::uint64_t budget,
                     std::vector<std::vector<Word>>* tuples) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) {
    if (tuples) tuples->push_back({});
    return PsCount{1, 1};
  }
  std::vector<Word> cyc = enumerate_cyc(m, n, budget);
  std::uint64_t total = checked_pow_u64(cyc.size(), k);
  if (total > budget) throw budget_error(total, budget);

  PsCount out{total, 0};
  std::vector<std::size_t> idx(k, 0);
  std::vector<Word> tuple(k);
  // Odometer over cyc(n)^k with per-slot compatibility pruning.
  int slot = 0;
  for (;;) {
    if (slot == k) {
      ++out.count;
      if (tuples) tuples->push_back(tuple);
      --slot;
      ++idx[slot];
    }
    while (slot >= 0 && idx[slot] == cyc.size()) {
      idx[slot] = 0;
      --slot;
      if (slot >= 0) ++idx[slot];
    }
    if (slot < 0) break;
    tuple[slot] = cyc[idx[slot]];
    if (compatible(tuple, slot, tuple[slot], lambda, n))
      ++slot;
    else
      ++idx[slot];
  }
  return out;
}

PsDensity sample_ps_density(int m, int k, const Rational& lambda, int n, std::uint64_t samples,
                            std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (k < 1) throw std::invalid_argument("sampling needs k >= 1");
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  std::vector<Word> tuple(k);
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      tuple[i] = random_cyc_word(m, n, rng);
      if (ok && !compatible(tuple, i, tuple[i], lambda, n)) ok = false;
      // keep drawing all k words so the stream position is sample-independent
    }
    if (ok) ++hits;
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return PsDensity{samples, hits, p, se, seed};
}

std::vector<Word> find_cprime_relators(int m, const Rational& lambda, int len_min, int len_max,
                                       std::size_t count, std::uint64_t seed,
                                       std::uint64_t max_trials) {
  if (len_min < 1 || len_max < len_min) throw std::invalid_argument("bad length range");
  std::mt19937_64 rng(seed);
  std::vector<Word> found;
  int span = len_max - len_min + 1;
  for (std::uint64_t trial = 0; trial < max_trials && found.size() < count; ++trial) {
    int n = len_min + static_cast<int>(trial % span);
    Word w = random_cyc_word(m, n, rng);
    if (!compatible({}, 0, w, lambda, n)) continue;
    // avoid conjugate duplicates among the hits
    bool dup = false;
    CyclicFamily fw(w);
    for (const Word& g : found)
      if (g.size() == w.size() && CyclicFamily(g) == fw) dup = true;
    if (!dup) found.push_back(w);
  }
  if (found.size() < count)
    throw std::runtime_error("relator search exhausted its trial budget");
  return found;
}

PsDimResult ps_dimension_experiment(int m, int k, const Rational& lambda, int n_min, int n_max,
                                    std::uint64_t budget, std::uint64_t exact_cap, int threads) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
  PsDimResult res;
  res.m = m;
  res.k = k;
  res.n_min = n_min;
  res.n_max = n_max;
  res.lambda = lambda;
  double log2q = std::log2(2.0 * m - 1.0);
  res.dim_lower = k * log2q;
  res.dim_upper = k * log2q * lambda.den / (lambda.den - 3.0 * lambda.num);

  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::vector<Word>> tuples;
    PsCount c = enumerate_ps(m, k, lambda, n, budget, &tuples);
    PsDimRow row{};
    row.n = n;
    row.cyc_n = count_cyc(m, n, budget);
    row.ps_n = c.count;
    double fiber = 1.0;
    for (int i = 2; i <= k; ++i) fiber *= i;
    for (int i = 0; i < k; ++i) fiber *= 2.0 * n;
    row.fiber_bound = fiber;
    row.lower_certificate = c.count / fiber;
    row.exact_closures = -1;
    row.s_tuples = c.count > 0 ? std::log2(static_cast<double>(c.count)) / n
                               : std::numeric_limits<double>::quiet_NaN();
    row.s_exact = std::numeric_limits<double>::quiet_NaN();
    if (c.count > 0 && c.count <= exact_cap && k >= 1) {
      std::unordered_set<std::string> fps;
      for (const auto& tuple : tuples) {
        Presentation p = Presentation::small_cancellation(m, tuple, lambda);
        fps.insert(closure_fingerprint(p, n, budget, threads).key());
      }
      row.exact_closures = static_cast<std::int64_t>(fps.size());
      row.s_exact = std::log2(static_cast<double>(fps.size())) / n;
    } else if (c.count == 0) {
      row.exact_closures = 0;
    }
    res.rows.push_back(row);
  }
  return res;
}

}  // namespace mgl
