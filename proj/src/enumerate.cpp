#include "mgl/enumerate.hpp"

#include <atomic>
#include <string>
#include <thread>

#include "mgl/fingerprint.hpp"

namespace mgl {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("count overflows 64 bits");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

budget_error::budget_error(std::uint64_t required_, std::uint64_t limit_)
    : std::runtime_error("enumeration budget exceeded: need " + std::to_string(required_) +
                         " words, cap is " + std::to_string(limit_)),
      required(required_),
      limit(limit_) {}

std::uint64_t ball_size(int m, int n) {
  if (m < 2) throw std::invalid_argument("ball_size requires m >= 2");
  if (n < 0) throw std::invalid_argument("negative radius");
  if (n == 0) return 1;
  std::uint64_t p = checked_pow(2 * static_cast<std::uint64_t>(m) - 1, n);
  // m/(m-1) * (p - 1) is integral: p = (2m-1)^n == 1 mod (2m-2).
  return checked_mul(p - 1, m) / (m - 1) + 1;
}

std::uint64_t sphere_size(int m, int n) {
  if (n == 0) return 1;
  return checked_mul(2 * static_cast<std::uint64_t>(m),
                     checked_pow(2 * static_cast<std::uint64_t>(m) - 1, n - 1));
}

namespace {

// Emits every reduced word of length exactly `len` extending `prefix`, in
// lexicographic rank order.
template <typename Fn>
void extend(std::vector<Letter>& prefix, int m, int len, Fn&& emit) {
  if (static_cast<int>(prefix.size()) == len) {
    emit(prefix);
    return;
  }
  Letter last = prefix.empty() ? 0 : prefix.back();
  for (int rank = 0; rank < 2 * m; ++rank) {
    Letter x = letter_from_rank(rank);
    if (last != 0 && x == inverse(last)) continue;
    prefix.push_back(x);
    extend(prefix, m, len, emit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_ball_word(int m, int n, const std::function<void(std::uint64_t, const Word&)>& fn,
                        std::uint64_t budget) {
  std::uint64_t total = ball_size(m, n);
  if (total > budget) throw budget_error(total, budget);
  std::uint64_t index = 0;
  std::vector<Letter> prefix;
  for (int len = 0; len <= n; ++len) {
    extend(prefix, m, len, [&](const std::vector<Letter>& w) {
      fn(index++, Word::from_reduced(w));
    });
  }
}

Ball enumerate_ball(int m, int n, std::uint64_t budget) {
  Ball ball{m, n, {}};
  std::uint64_t total = ball_size(m, n);
  if (total > budget) throw budget_error(total, budget);
  ball.words.reserve(total);
  for_each_ball_word(m, n, [&](std::uint64_t, const Word& w) { ball.words.push_back(w); },
                     budget);
  return ball;
}

std::vector<Word> enumerate_cyc(int m, int n, std::uint64_t budget) {
  if (m < 2) throw std::invalid_argument("enumerate_cyc requires m >= 2");
  if (n < 1) throw std::invalid_argument("enumerate_cyc requires n >= 1");
  std::uint64_t bound = sphere_size(m, n);
  if (bound > budget) throw budget_error(bound, budget);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  extend(prefix, m, n, [&](const std::vector<Letter>& w) {
    if (w.size() < 2 || w.front() != inverse(w.back())) out.push_back(Word::from_reduced(w));
  });
  return out;
}

std::uint64_t count_cyc(int m, int n, std::uint64_t budget) {
  if (m < 2) throw std::invalid_argument("count_cyc requires m >= 2");
  if (n < 1) throw std::invalid_argument("count_cyc requires n >= 1");
  std::uint64_t bound = sphere_size(m, n);
  if (bound > budget) throw budget_error(bound, budget);
  std::uint64_t count = 0;
  std::vector<Letter> prefix;
  extend(prefix, m, n, [&](const std::vector<Letter>& w) {
    if (w.size() < 2 || w.front() != inverse(w.back())) ++count;
  });
  return count;
}

std::vector<std::uint64_t> word_prefix_counts(int m, int n) {
  std::vector<std::uint64_t> counts;
  counts.reserve(n + 1);
  for (int r = 0; r <= n; ++r) counts.push_back(ball_size(m, r));
  return counts;
}

BallFingerprint ball_membership_fingerprint(int m, int n,
                                            const std::function<bool(const Word&)>& member,
                                            std::uint64_t budget, int threads) {
  auto counts = word_prefix_counts(m, n);
  std::uint64_t total = counts.back();
  if (total > budget) throw budget_error(total, budget);
  std::vector<unsigned char> verdict(total, 0);
  if (threads <= 1 || n == 0) {
    for_each_ball_word(
        m, n, [&](std::uint64_t i, const Word& w) { verdict[i] = member(w) ? 1 : 0; }, budget);
  } else {
    verdict[0] = member(Word{}) ? 1 : 0;
    std::atomic<int> next_shard{0};
    auto worker = [&]() {
      for (;;) {
        int shard = next_shard.fetch_add(1);
        if (shard >= 2 * m) return;
        std::vector<Letter> prefix{letter_from_rank(shard)};
        for (int len = 1; len <= n; ++len) {
          // Words of this length and first letter fill a contiguous block.
          std::uint64_t base =
              counts[len - 1] + static_cast<std::uint64_t>(shard) * (sphere_size(m, len) / (2 * m));
          std::uint64_t local = 0;
          extend(prefix, m, len, [&](const std::vector<Letter>& w) {
            verdict[base + local++] = member(Word::from_reduced(w)) ? 1 : 0;
          });
        }
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min(threads, 2 * m);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  BallFingerprint f(m, n, counts);
  for (std::uint64_t i = 0; i < total; ++i)
    if (verdict[i]) f.set(i);
  return f;
}

std::set<Word, WordLess> cyclic_conjugates(const Word& w, bool with_inverse) {
  if (!w.cyclically_reduced())
    throw std::invalid_argument("cyclic_conjugates requires a cyclically reduced word");
  std::set<Word, WordLess> out;
  std::size_t len = w.empty() ? 1 : w.size();
  for (std::size_t i = 0; i < len; ++i) out.insert(cyclic_rotation(w, i));
  if (with_inverse) {
    Word inv = w.inverse();
    for (std::size_t i = 0; i < len; ++i) out.insert(cyclic_rotation(inv, i));
  }
  return out;
}

}  // namespace mgl
