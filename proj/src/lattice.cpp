#include "mgl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mgl {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("lattice count overflow");
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_dims(const LatticePoint& p, int m) {
  if (static_cast<int>(p.size()) != m)
    throw std::invalid_argument("lattice point has wrong dimension");
}

}  // namespace

std::uint64_t l1_ball_count(int m, int n) {
  if (m < 1) throw std::invalid_argument("l1_ball_count requires m >= 1");
  if (n < 0) throw std::invalid_argument("negative radius");
  std::uint64_t total = 0;
  for (int l = 0; l <= std::min(m, n); ++l) {
    std::uint64_t term = binomial(m, l);
    term = checked_mul(term, binomial(n, l));
    term = checked_mul(term, std::uint64_t{1} << l);
    total += term;
  }
  return total;
}

std::vector<LatticePoint> l1_ball(int m, int n, std::uint64_t budget) {
  std::uint64_t total = l1_ball_count(m, n);
  if (total > budget) throw budget_error(total, budget);
  std::vector<LatticePoint> points;
  points.reserve(total);
  LatticePoint cur(m, 0);
  // all points of norm exactly s, coordinates lexicographic
  auto fill = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      for (std::int64_t v : {-static_cast<std::int64_t>(remaining),
                             static_cast<std::int64_t>(remaining)}) {
        cur[pos] = v;
        points.push_back(cur);
        if (remaining == 0) break;
      }
      return;
    }
    for (std::int64_t v = -remaining; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - static_cast<int>(v < 0 ? -v : v));
    }
  };
  for (int s = 0; s <= n; ++s) fill(fill, 0, s);
  return points;
}

std::vector<std::uint64_t> lattice_prefix_counts(int m, int n) {
  std::vector<std::uint64_t> counts;
  counts.reserve(n + 1);
  for (int r = 0; r <= n; ++r) counts.push_back(l1_ball_count(m, r));
  return counts;
}

std::string HNFMatrix::key() const {
  std::string s = std::to_string(m) + ";";
  for (const auto& row : rows) {
    for (std::int64_t v : row) s += std::to_string(v) + ",";
    s += ";";
  }
  return s;
}

HNFMatrix hnf(const std::vector<LatticePoint>& generators, int m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : generators) {
    check_dims(g, m);
    rows.push_back(g);
  }
  std::size_t r = 0;
  for (int col = 0; col < m && r < rows.size(); ++col) {
    // Euclidean elimination below the pivot row.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            std::abs(rows[i][col]) < std::abs(rows[best][col]))
          best = i;
      }
      if (best == rows.size()) break;  // no pivot in this column
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        std::int64_t q = rows[i][col] / rows[r][col];
        for (int c = 0; c < m; ++c) rows[i][c] -= q * rows[r][c];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (int c = 0; c < m; ++c) rows[r][c] = -rows[r][c];
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = floordiv(rows[i][col], rows[r][col]);
      if (q != 0)
        for (int c = 0; c < m; ++c) rows[i][c] -= q * rows[r][c];
    }
    ++r;
  }
  rows.resize(r);
  return HNFMatrix{m, std::move(rows)};
}

bool hnf_contains(const HNFMatrix& h, const LatticePoint& p) {
  check_dims(p, h.m);
  LatticePoint x = p;
  for (const auto& row : h.rows) {
    int col = 0;
    while (col < h.m && row[col] == 0) ++col;
    if (x[col] % row[col] != 0) {
      // the pivot must clear this coordinate exactly
      continue;
    }
    std::int64_t t = x[col] / row[col];
    if (t != 0)
      for (int c = 0; c < h.m; ++c) x[c] -= t * row[c];
  }
  for (std::int64_t v : x)
    if (v != 0) return false;
  return true;
}

BallFingerprint subgroup_fingerprint(const HNFMatrix& h, int n, std::uint64_t budget) {
  auto points = l1_ball(h.m, n, budget);
  BallFingerprint f(h.m, n, lattice_prefix_counts(h.m, n));
  for (std::uint64_t i = 0; i < points.size(); ++i)
    if (hnf_contains(h, points[i])) f.set(i);
  return f;
}

std::uint64_t zm_cover_bound(int m, int n) {
  std::uint64_t b = l1_ball_count(m, n);
  std::uint64_t total = 0;
  for (int l = 0; l <= m; ++l) total += binomial(b, l);
  return total;
}

ZmCover covering_number_Zm(int m, int n, std::uint64_t budget) {
  if (m < 1) throw std::invalid_argument("covering_number_Zm requires m >= 1");
  if (m > 2) return ZmCover{false, zm_cover_bound(m, n), 0};

  auto points = l1_ball(m, n, budget);
  // Half ball: g and -g span the same subgroup.
  std::vector<LatticePoint> half;
  for (const auto& p : points) {
    bool positive = false, zero = true;
    for (std::int64_t v : p) {
      if (v != 0) {
        positive = v > 0;
        zero = false;
        break;
      }
    }
    if (!zero && positive) half.push_back(p);
  }

  // Close {trivial} under adjoining ball points; every subgroup generated
  // by a subset of the ball is reached by adding one generator at a time.
  std::unordered_map<std::string, HNFMatrix> visited;
  std::deque<HNFMatrix> queue;
  HNFMatrix trivial{m, {}};
  visited.emplace(trivial.key(), trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    HNFMatrix h = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : half) {
      if (hnf_contains(h, g)) continue;
      std::vector<LatticePoint> gens(h.rows.begin(), h.rows.end());
      gens.push_back(g);
      HNFMatrix next = hnf(gens, m);
      if (visited.count(next.key())) continue;
      if (visited.size() >= budget) throw budget_error(visited.size() + 1, budget);
      visited.emplace(next.key(), next);
      queue.push_back(next);
    }
  }

  std::unordered_set<std::string> patterns;
  for (const auto& [key, h] : visited)
    patterns.insert(subgroup_fingerprint(h, n, budget).key());
  return ZmCover{true, patterns.size(), visited.size()};
}

std::vector<ZmDimRow> zm_dimension_experiment(int m, int n_min, int n_max,
                                              std::uint64_t budget) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
  std::vector<ZmDimRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ZmDimRow row{};
    row.n = n;
    row.b_n = l1_ball_count(m, n);
    row.bound = zm_cover_bound(m, n);
    bool exhaustive = m <= 2 && (m == 1 || n <= 12);
    if (exhaustive) {
      ZmCover cover = covering_number_Zm(m, n, budget);
      row.exact = cover.exact;
      row.count = cover.value;
    } else {
      row.exact = false;
      row.count = row.bound;
    }
    row.s_n = std::log2(static_cast<double>(row.count)) / n;
    row.bn_over_nm = static_cast<double>(row.b_n) / std::pow(static_cast<double>(n), m);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mgl
