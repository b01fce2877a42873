#include "mgl/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mgl/enumerate.hpp"
#include "mgl/lattice.hpp"

namespace mgl {

BallFingerprint::BallFingerprint(int m, int n, std::vector<std::uint64_t> prefix_counts)
    : m_(m), n_(n), prefix_counts_(std::move(prefix_counts)) {
  if (prefix_counts_.size() != static_cast<std::size_t>(n_) + 1)
    throw std::invalid_argument("prefix_counts must have n+1 entries");
  bits_.assign((prefix_counts_.back() + 63) / 64, 0);
}

void BallFingerprint::set(std::uint64_t i, bool value) {
  if (i >= count()) throw std::out_of_range("fingerprint bit index");
  if (value)
    bits_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  else
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::uint64_t BallFingerprint::popcount() const {
  std::uint64_t c = 0;
  for (std::uint64_t b : bits_) c += std::popcount(b);
  return c;
}

namespace {

// Compares the first `nbits` bits of two block vectors.
bool bits_prefix_equal(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                       std::uint64_t nbits) {
  std::uint64_t full = nbits / 64;
  for (std::uint64_t i = 0; i < full; ++i)
    if (a[i] != b[i]) return false;
  std::uint64_t rem = nbits % 64;
  if (rem == 0) return true;
  std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
  return (a[full] & mask) == (b[full] & mask);
}

}  // namespace

BallFingerprint BallFingerprint::restricted(int radius) const {
  if (radius < 0 || radius > n_) throw std::invalid_argument("restriction radius out of range");
  BallFingerprint out(m_, radius,
                      std::vector<std::uint64_t>(prefix_counts_.begin(),
                                                 prefix_counts_.begin() + radius + 1));
  std::uint64_t nbits = out.count();
  for (std::uint64_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = bits_[i];
  std::uint64_t rem = nbits % 64;
  if (rem != 0) out.bits_.back() &= (std::uint64_t{1} << rem) - 1;
  return out;
}

bool BallFingerprint::prefix_equal(const BallFingerprint& other, int radius) const {
  if (radius > n_ || radius > other.n_)
    throw std::invalid_argument("fingerprint radius too small for comparison");
  if (prefix_counts_[radius] != other.prefix_counts_[radius])
    throw std::invalid_argument("fingerprints over different ground enumerations");
  return bits_prefix_equal(bits_, other.bits_, prefix_counts_[radius]);
}

bool BallFingerprint::operator==(const BallFingerprint& other) const {
  return m_ == other.m_ && n_ == other.n_ && prefix_counts_ == other.prefix_counts_ &&
         bits_ == other.bits_;
}

std::string BallFingerprint::key() const {
  std::string s;
  s.reserve(bits_.size() * 8 + 8);
  auto push64 = [&s](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  push64(count());
  for (std::uint64_t b : bits_) push64(b);
  return s;
}

std::size_t FingerprintHash::operator()(const BallFingerprint& f) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t b : f.blocks()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

Valuation valuation(const BallFingerprint& a, const BallFingerprint& b) {
  int probe = std::min(a.radius(), b.radius());
  for (int r = 0; r <= probe; ++r) {
    if (a.prefix_counts()[r] != b.prefix_counts()[r])
      throw std::invalid_argument("fingerprints over different ground enumerations");
  }
  if (a.prefix_equal(b, probe)) return Valuation{probe, true, probe};
  // Largest r with equal prefixes; r = -1 when bit 0 already differs.
  int lo = -1;
  for (int r = probe - 1; r >= 0; --r) {
    if (a.prefix_equal(b, r)) {
      lo = r;
      break;
    }
  }
  return Valuation{probe, false, lo};
}

double DyadicDistance::to_double() const { return std::ldexp(1.0, -exponent); }

DyadicDistance distance(const BallFingerprint& a, const BallFingerprint& b) {
  Valuation v = valuation(a, b);
  if (v.agree_through_probe) return DyadicDistance{true, v.probe};
  return DyadicDistance{false, v.value};
}

std::uint64_t covering_number(const std::vector<BallFingerprint>& family, int n) {
  std::unordered_set<std::string> seen;
  for (const auto& f : family) {
    if (f.radius() < n) throw std::invalid_argument("fingerprint radius below covering radius");
    seen.insert(f.restricted(n).key());
  }
  return seen.size();
}

DimEstimate dim_sequence(const std::vector<std::pair<int, std::uint64_t>>& counts, int window) {
  if (counts.empty()) throw std::invalid_argument("dim_sequence needs at least one entry");
  DimEstimate est;
  for (auto [n, count] : counts) {
    if (count < 1) throw std::invalid_argument("dim_sequence counts must be >= 1");
    if (n < 1) throw std::invalid_argument("dim_sequence requires n >= 1");
    est.rows.push_back({n, count, std::log2(static_cast<double>(count)) / n});
  }
  if (window <= 0) window = static_cast<int>((est.rows.size() + 1) / 2);
  window = std::min<int>(window, static_cast<int>(est.rows.size()));
  est.window = window;
  est.liminf_est = est.rows[est.rows.size() - window].s;
  est.limsup_est = est.liminf_est;
  for (std::size_t i = est.rows.size() - window; i < est.rows.size(); ++i) {
    est.liminf_est = std::min(est.liminf_est, est.rows[i].s);
    est.limsup_est = std::max(est.limsup_est, est.rows[i].s);
  }
  return est;
}

std::vector<GrowthRow> growth_stats(int m, int n_max, std::uint64_t budget) {
  if (n_max < 1) throw std::invalid_argument("growth_stats requires n_max >= 1");
  std::uint64_t top = ball_size(m, n_max + 1);
  if (top > budget) throw budget_error(top, budget);
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t beta = ball_size(m, n);
    std::uint64_t sigma = ball_size(m, n + 1) - beta;
    rows.push_back({n, beta, sigma, static_cast<double>(beta) / n,
                    std::pow(static_cast<double>(beta), 1.0 / n)});
  }
  return rows;
}

std::string to_hex(const BallFingerprint& f) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t nbits = f.count();
  std::string s;
  s.reserve((nbits + 3) / 4);
  for (std::uint64_t i = 0; i < nbits; i += 4) {
    int v = 0;
    for (int j = 0; j < 4; ++j)
      if (i + j < nbits && f.test(i + j)) v |= 8 >> j;  // bit i is the digit's MSB
    s.push_back(digits[v]);
  }
  return s;
}

void write_fingerprints(std::ostream& os, const std::vector<BallFingerprint>& family) {
  if (family.empty()) throw std::invalid_argument("empty fingerprint family");
  const auto& f0 = family.front();
  os << f0.m() << ' ' << f0.radius() << ' ' << f0.count() << '\n';
  for (const auto& f : family) {
    if (f.m() != f0.m() || f.radius() != f0.radius() || f.count() != f0.count())
      throw std::invalid_argument("fingerprint family must share m, n and ground set");
    os << to_hex(f) << '\n';
  }
}

std::vector<BallFingerprint> read_fingerprints(std::istream& is) {
  int m, n;
  std::uint64_t beta;
  if (!(is >> m >> n >> beta)) throw std::invalid_argument("bad fingerprint header");
  std::vector<std::uint64_t> counts;
  bool word_ground = false;
  if (m >= 2) {
    try {
      if (ball_size(m, n) == beta) word_ground = true;
    } catch (const std::overflow_error&) {
    }
  }
  if (word_ground) {
    for (int r = 0; r <= n; ++r) counts.push_back(ball_size(m, r));
  } else if (l1_ball_count(m, n) == beta) {
    counts = lattice_prefix_counts(m, n);
  } else {
    throw std::invalid_argument("fingerprint header matches no known ground enumeration");
  }
  std::vector<BallFingerprint> family;
  std::string line;
  while (is >> line) {
    if (line.size() != (beta + 3) / 4)
      throw std::invalid_argument("fingerprint hex line has wrong length");
    BallFingerprint f(m, n, counts);
    for (std::uint64_t i = 0; i < beta; ++i) {
      char c = line[i / 4];
      int v = c >= 'a' ? c - 'a' + 10 : c >= 'A' ? c - 'A' + 10 : c - '0';
      if (v < 0 || v > 15) throw std::invalid_argument("bad hex digit in fingerprint");
      if (v & (8 >> (i % 4))) f.set(i);
    }
    family.push_back(std::move(f));
  }
  return family;
}

}  // namespace mgl
