#include <algorithm>
#include <random>

#include "doctest.h"
#include "mgl/enumerate.hpp"
#include "mgl/word.hpp"

using namespace mgl;

TEST_CASE("free reduction") {
  CHECK(format_word(parse_word("aA b", 2)) == "b");
  CHECK(format_word(parse_word("", 2)) == "1");
  CHECK(format_word(parse_word("1", 2)) == "1");
  CHECK(format_word(parse_word("abBA", 2)) == "1");
  CHECK_THROWS_AS(parse_word("xyz", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a?b", 2), std::invalid_argument);
}

TEST_CASE("reduce is idempotent on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 40), letter(0, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> raw;
    int L = len(rng);
    for (int i = 0; i < L; ++i) raw.push_back(letter_from_rank(letter(rng)));
    Word once = Word::reduce(raw);
    Word twice = Word::reduce(once.letters());
    CHECK(once == twice);
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(format_word(cyclic_reduce(parse_word("Aba", 2))) == "b");
  CHECK(format_word(cyclic_reduce(parse_word("ab", 2))) == "ab");
  CHECK(format_word(cyclic_reduce(parse_word("AbbA", 2))) == "AbbA");
  CHECK(format_word(cyclic_reduce(parse_word("a", 2))) == "a");
  // first letter never the inverse of the last
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(2, 30), letter(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> raw;
    int L = len(rng);
    for (int i = 0; i < L; ++i) raw.push_back(letter_from_rank(letter(rng)));
    Word w = cyclic_reduce(Word::reduce(raw));
    if (w.size() >= 2) CHECK(w[0] != inverse(w[w.size() - 1]));
  }
}

TEST_CASE("ball size closed form") {
  CHECK(ball_size(2, 0) == 1);
  CHECK(ball_size(2, 1) == 5);
  CHECK(ball_size(2, 2) == 17);
  CHECK(ball_size(3, 2) == 37);
  CHECK_THROWS_AS(ball_size(1, 3), std::invalid_argument);
}

TEST_CASE("enumeration matches the closed form and stays sorted") {
  for (int m = 2; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      Ball b = enumerate_ball(m, n);
      CHECK(b.size() == ball_size(m, n));
      CHECK(std::is_sorted(b.words.begin(), b.words.end(), word_less));
      for (std::size_t i = 1; i < b.words.size(); ++i)
        CHECK(word_less(b.words[i - 1], b.words[i]));  // strictly increasing
    }
  }
}

TEST_CASE("canonical order of the radius-1 ball") {
  Ball b = enumerate_ball(2, 1);
  std::vector<std::string> got;
  for (const Word& w : b.words) got.push_back(format_word(w));
  CHECK(got == std::vector<std::string>{"1", "a", "A", "b", "B"});
}

TEST_CASE("budget failures are loud and total") {
  CHECK_THROWS_AS(enumerate_ball(2, 10, 100), budget_error);
  CHECK_THROWS_AS(enumerate_cyc(2, 12, 1000), budget_error);
  try {
    enumerate_ball(2, 10, 100);
  } catch (const budget_error& e) {
    CHECK(e.required == ball_size(2, 10));
    CHECK(e.limit == 100);
  }
}

TEST_CASE("cyclically reduced enumeration against the ball filter") {
  for (int n = 1; n <= 6; ++n) {
    auto cyc = enumerate_cyc(2, n);
    // oracle: filter the sphere
    Ball b = enumerate_ball(2, n);
    std::vector<Word> expect;
    for (const Word& w : b.words)
      if (w.size() == static_cast<std::size_t>(n) && w.cyclically_reduced()) expect.push_back(w);
    CHECK(cyc == expect);
    CHECK(count_cyc(2, n) == expect.size());
  }
  CHECK(enumerate_cyc(2, 1).size() == 4);
  CHECK(enumerate_cyc(2, 2).size() == 12);
  CHECK(enumerate_cyc(2, 3).size() == 28);
}

TEST_CASE("cyclic conjugates") {
  auto conj = cyclic_conjugates(parse_word("ab", 2), false);
  CHECK(conj.size() == 2);
  CHECK(conj.count(parse_word("ab", 2)) == 1);
  CHECK(conj.count(parse_word("ba", 2)) == 1);

  auto with_inv = cyclic_conjugates(parse_word("ab", 2), true);
  CHECK(with_inv.size() == 4);

  auto square = cyclic_conjugates(parse_word("aa", 2), true);
  CHECK(square.size() == 2);
  CHECK(square.count(parse_word("AA", 2)) == 1);

  CHECK_THROWS_AS(cyclic_conjugates(parse_word("Aba", 2), false), std::invalid_argument);
}

TEST_CASE("streaming enumeration agrees with the materialized ball") {
  Ball b = enumerate_ball(2, 5);
  std::uint64_t seen = 0;
  for_each_ball_word(2, 5, [&](std::uint64_t i, const Word& w) {
    REQUIRE(i < b.size());
    CHECK(w == b.words[i]);
    ++seen;
  });
  CHECK(seen == b.size());
}

TEST_CASE("sharded fingerprint construction is schedule independent") {
  auto pred = [](const Word& w) { return w.size() % 2 == 0; };
  BallFingerprint serial = ball_membership_fingerprint(2, 5, pred, kDefaultBudget, 1);
  BallFingerprint parallel = ball_membership_fingerprint(2, 5, pred, kDefaultBudget, 8);
  CHECK(serial == parallel);
  BallFingerprint grig = ball_membership_fingerprint(4, 4, pred, kDefaultBudget, 3);
  BallFingerprint grig1 = ball_membership_fingerprint(4, 4, pred, kDefaultBudget, 1);
  CHECK(grig == grig1);
}
