#include <random>

#include "doctest.h"
#include "mgl/dehn.hpp"
#include "mgl/enumerate.hpp"
#include "mgl/ps.hpp"
#include "oracles.hpp"

using namespace mgl;

namespace {

Presentation seeded_cprime_presentation() {
  // C'(1/6) single relator found by seeded search, pinned here.
  static std::vector<Word> relators =
      find_cprime_relators(2, Rational(1, 6), 24, 30, 1, 424242);
  return Presentation::small_cancellation(2, relators, Rational(1, 6));
}

}  // namespace

TEST_CASE("presentation validation") {
  Rational sixth(1, 6);
  CHECK_THROWS_AS(Presentation::small_cancellation(2, {}, sixth), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::small_cancellation(2, {parse_word("abab", 2)}, sixth),
                  std::invalid_argument);  // C' fails
  CHECK_THROWS_AS(Presentation::small_cancellation(2, {parse_word("ab", 2)}, Rational(1, 5)),
                  std::invalid_argument);  // lambda > 1/6
  CHECK_THROWS_AS(Presentation::one_relator_power(2, parse_word("ab", 2), 1),
                  std::invalid_argument);
  CHECK_NOTHROW(Presentation::small_cancellation(2, {parse_word("ab", 2)}, sixth));
}

TEST_CASE("relator itself and its conjugates are members") {
  Presentation p = seeded_cprime_presentation();
  const Word& r = p.relators.front();

  DehnResult direct = dehn_member(r, p);
  CHECK(direct.member);
  CHECK(replay_trace(r, p, direct.steps));

  Ball small = enumerate_ball(2, 2);
  for (const Word& g : small.words) {
    Word w = g * r * g.inverse() * r.inverse();
    DehnResult res = dehn_member(w, p);
    CHECK(res.member);
    CHECK(replay_trace(w, p, res.steps));
  }
}

TEST_CASE("single generators are not members") {
  Presentation p = seeded_cprime_presentation();
  CHECK_FALSE(dehn_member(parse_word("a", 2), p).member);
  CHECK_FALSE(dehn_member(parse_word("B", 2), p).member);
}

TEST_CASE("BFS closure members are all accepted with replayable traces") {
  Presentation p = seeded_cprime_presentation();
  auto members = oracle::bfs_closure(p.relators, 2, 2, 2, 70);
  CHECK(members.size() > 10);
  for (const Word& w : members) {
    DehnResult res = dehn_member(w, p);
    CHECK(res.member);
    CHECK(replay_trace(w, p, res.steps));
    if (!w.empty()) {
      REQUIRE(!res.steps.empty());
      // Greendlinger certificate: the first replaced block is long enough.
      const Word& r = p.relators[res.steps[0].relator];
      CHECK(6 * res.steps[0].replaced_length > 3 * r.size());  // len > (1-3/6)|r|
    }
  }
}

TEST_CASE("short nontrivial words are never members of a long-relator closure") {
  Presentation p = seeded_cprime_presentation();
  // Greendlinger: members contain > (1-3 lambda)|r| = |r|/2 >= 12 letters.
  Ball b = enumerate_ball(2, 5);
  for (const Word& w : b.words)
    if (!w.empty()) CHECK_FALSE(dehn_member(w, p).member);
}

TEST_CASE("tampered traces are rejected by the replayer") {
  Presentation p = seeded_cprime_presentation();
  const Word& r = p.relators.front();
  DehnResult res = dehn_member(r, p);
  REQUIRE(res.member);
  auto bad = res.steps;
  bad[0].replaced_length = 1;  // below threshold
  CHECK_FALSE(replay_trace(r, p, bad));
  auto bad2 = res.steps;
  bad2[0].conjugate_offset += 1;  // wrong conjugate
  CHECK_FALSE(replay_trace(r, p, bad2));
  CHECK_FALSE(replay_trace(parse_word("a", 2), p, res.steps));
}

TEST_CASE("closure fingerprint marks exactly the members") {
  Presentation p = Presentation::small_cancellation(2, {parse_word("ab", 2)}, Rational(1, 6));
  BallFingerprint f = closure_fingerprint(p, 4);
  Ball b = enumerate_ball(2, 4);
  for (std::uint64_t i = 0; i < b.size(); ++i)
    CHECK(f.test(i) == dehn_member(b.words[i], p).member);
  CHECK(f.test(0));  // identity
  // threads do not change the bitmap
  CHECK(closure_fingerprint(p, 4, kDefaultBudget, 8) == f);
}

TEST_CASE("relators longer than n/(1-3 lambda) give the trivial fingerprint") {
  Presentation p = seeded_cprime_presentation();
  // |r| >= 24 and threshold |r|/2 >= 12 > 8: only the identity survives.
  BallFingerprint f = closure_fingerprint(p, 8);
  CHECK(f.popcount() == 1);
  CHECK(f.test(0));
}
