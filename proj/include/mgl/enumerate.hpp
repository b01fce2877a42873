// Exhaustive enumeration of balls and cyclically reduced words, in the
// canonical length-then-lexicographic order.
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

#include "mgl/word.hpp"

namespace mgl {

// Raised when an enumeration would exceed its configured cap. Callers get
// either complete output or this error, never a truncated result.
class budget_error : public std::runtime_error {
 public:
  budget_error(std::uint64_t required, std::uint64_t limit);
  std::uint64_t required;
  std::uint64_t limit;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;  // words

// |B(n)| for the free group on m generators, m >= 2 (the m = 1 ball lives
// in the lattice module): 1 + m/(m-1) * ((2m-1)^n - 1).
std::uint64_t ball_size(int m, int n);

// Number of reduced words of length exactly n: beta(n) - beta(n-1).
std::uint64_t sphere_size(int m, int n);

// All reduced words of length <= n, canonical order.
struct Ball {
  int m = 0;
  int n = 0;
  std::vector<Word> words;
  std::uint64_t size() const { return words.size(); }
};

Ball enumerate_ball(int m, int n, std::uint64_t budget = kDefaultBudget);

// Streaming variant: fn(index, word) in canonical order, index = position
// in the ball enumeration. Avoids materializing large balls.
void for_each_ball_word(int m, int n, const std::function<void(std::uint64_t, const Word&)>& fn,
                        std::uint64_t budget = kDefaultBudget);

// Cyclically reduced words of length exactly n, canonical order.
std::vector<Word> enumerate_cyc(int m, int n, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_cyc(int m, int n, std::uint64_t budget = kDefaultBudget);

// All rotations of w (and of w^-1 when with_inverse), deduplicated.
// Requires w cyclically reduced.
std::set<Word, WordLess> cyclic_conjugates(const Word& w, bool with_inverse);

}  // namespace mgl
