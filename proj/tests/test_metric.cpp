#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"
#include "mgl/lattice.hpp"
#include "oracles.hpp"

using namespace mgl;

namespace {

BallFingerprint word_set_fingerprint(int m, int n, const std::vector<std::string>& words) {
  std::vector<Word> set;
  for (const auto& s : words) set.push_back(parse_word(s, m));
  return ball_membership_fingerprint(
      m, n,
      [&set](const Word& w) { return std::find(set.begin(), set.end(), w) != set.end(); },
      kDefaultBudget, 1);
}

BallFingerprint random_fingerprint(int m, int n, std::mt19937_64& rng) {
  BallFingerprint f(m, n, word_prefix_counts(m, n));
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::uint64_t i = 0; i < f.count(); ++i)
    if (bit(rng)) f.set(i);
  return f;
}

}  // namespace

TEST_CASE("valuation and distance on small sets") {
  auto A = word_set_fingerprint(2, 3, {"1"});
  auto B = word_set_fingerprint(2, 3, {"1", "a"});
  auto C = word_set_fingerprint(2, 3, {"1", "aa"});

  Valuation vab = valuation(A, B);
  CHECK_FALSE(vab.agree_through_probe);
  CHECK(vab.value == 0);
  CHECK(distance(A, B).to_double() == 1.0);

  Valuation vac = valuation(A, C);
  CHECK(vac.value == 1);
  CHECK(distance(A, C).to_double() == 0.5);

  Valuation vaa = valuation(A, A);
  CHECK(vaa.agree_through_probe);
  CHECK(vaa.probe == 3);
  DyadicDistance daa = distance(A, A);
  CHECK(daa.upper_bound);
  CHECK(daa.exponent == 3);
}

TEST_CASE("valuation uses the common radius as probe") {
  auto A = word_set_fingerprint(2, 4, {"1", "ab"});
  auto B = word_set_fingerprint(2, 2, {"1", "ab"});
  Valuation v = valuation(A, B);
  CHECK(v.probe == 2);
  CHECK(v.agree_through_probe);
}

TEST_CASE("ultrametric inequality, symmetry, identity on random triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    auto A = random_fingerprint(2, 3, rng);
    auto B = random_fingerprint(2, 3, rng);
    auto C = random_fingerprint(2, 3, rng);
    auto nu = [](const BallFingerprint& x, const BallFingerprint& y) {
      Valuation v = valuation(x, y);
      return v.agree_through_probe ? v.probe + 1 : v.value;  // larger = closer
    };
    // d(A,C) <= max(d(A,B), d(B,C))  <=>  nu(A,C) >= min(nu(A,B), nu(B,C))
    CHECK(nu(A, C) >= std::min(nu(A, B), nu(B, C)));
    CHECK(nu(A, B) == nu(B, A));
    CHECK(valuation(A, A).agree_through_probe);
  }
}

TEST_CASE("covering number equals packing number on random families") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BallFingerprint> family;
    std::uniform_int_distribution<int> sz(1, 24);
    int count = sz(rng);
    for (int i = 0; i < count; ++i) family.push_back(random_fingerprint(2, 2, rng));
    for (int n = 0; n <= 2; ++n)
      CHECK(covering_number(family, n) == oracle::greedy_packing(family, n));
  }
}

TEST_CASE("covering number of the full powerset of a ball is 2^beta") {
  for (int n = 0; n <= 1; ++n) {
    std::uint64_t beta = ball_size(2, n);
    std::vector<BallFingerprint> family;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta); ++mask) {
      BallFingerprint f(2, n, word_prefix_counts(2, n));
      for (std::uint64_t i = 0; i < beta; ++i)
        if (mask & (std::uint64_t{1} << i)) f.set(i);
      family.push_back(std::move(f));
    }
    CHECK(covering_number(family, n) == (std::uint64_t{1} << beta));
  }
}

TEST_CASE("covering number of the kZ family matches the exact law") {
  // subgroups kZ of Z restricted to radius 3: patterns for k = 0..10
  std::vector<BallFingerprint> family;
  for (int k = 0; k <= 10; ++k) {
    HNFMatrix h{1, {}};
    if (k > 0) h.rows.push_back({k});
    family.push_back(subgroup_fingerprint(h, 3));
  }
  CHECK(covering_number(family, 3) == 4);  // N(G(Z), 2^-3) = 3 + 1
  CHECK(covering_number({family[2]}, 3) == 1);
}

TEST_CASE("dimension sequences") {
  std::vector<std::pair<int, std::uint64_t>> counts;
  for (int n = 1; n <= 20; ++n) counts.push_back({n, static_cast<std::uint64_t>(n) + 1});
  DimEstimate est = dim_sequence(counts);
  CHECK(est.rows.back().s == doctest::Approx(std::log2(21.0) / 20).epsilon(1e-9));
  CHECK(est.rows.back().s == doctest::Approx(0.2196).epsilon(1e-3));
  for (std::size_t i = 1; i + 1 < est.rows.size(); ++i)
    CHECK(est.rows[i + 1].s < est.rows[i].s);  // trend down from n >= 2

  std::vector<std::pair<int, std::uint64_t>> pow2;
  for (int n = 1; n <= 10; ++n) pow2.push_back({n, std::uint64_t{1} << n});
  DimEstimate est2 = dim_sequence(pow2);
  for (const auto& row : est2.rows) CHECK(row.s == doctest::Approx(1.0));
  CHECK(est2.liminf_est == doctest::Approx(1.0));
  CHECK(est2.limsup_est == doctest::Approx(1.0));

  std::vector<std::pair<int, std::uint64_t>> pow3;
  std::uint64_t p = 1;
  for (int n = 1; n <= 10; ++n) pow3.push_back({n, p *= 3});
  for (const auto& row : dim_sequence(pow3).rows)
    CHECK(row.s == doctest::Approx(std::log2(3.0)).epsilon(1e-9));

  CHECK_THROWS_AS(dim_sequence({}), std::invalid_argument);
  CHECK_THROWS_AS(dim_sequence({{1, 0}}), std::invalid_argument);
}

TEST_CASE("growth table") {
  auto rows = growth_stats(2, 12, kDefaultBudget);
  CHECK(rows[0].beta == 5);
  CHECK(rows[0].sigma == 12);
  CHECK(rows[1].beta == 17);
  // beta^(1/n) approaches 2m-1 = 3 from above; within 5% at n = 15
  auto rows15 = growth_stats(2, 15, kDefaultBudget);
  CHECK(rows15.back().beta_root == doctest::Approx(3.0).epsilon(0.05));
  for (std::size_t i = 1; i < rows15.size(); ++i)
    CHECK(rows15[i].beta_root < rows15[i - 1].beta_root);
  auto rows3 = growth_stats(3, 2, kDefaultBudget);
  CHECK(rows3[1].beta == 37);
}

TEST_CASE("fingerprint restriction is a prefix and file io round-trips") {
  std::mt19937_64 rng(5);
  auto f = random_fingerprint(2, 3, rng);
  auto g = f.restricted(2);
  CHECK(g.count() == ball_size(2, 2));
  for (std::uint64_t i = 0; i < g.count(); ++i) CHECK(g.test(i) == f.test(i));

  std::stringstream ss;
  write_fingerprints(ss, {f, random_fingerprint(2, 3, rng)});
  auto back = read_fingerprints(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == f);

  // lattice ground set round-trip
  HNFMatrix h{2, {{1, 1}, {0, 2}}};
  auto lf = subgroup_fingerprint(h, 3);
  std::stringstream ls;
  write_fingerprints(ls, {lf});
  auto lback = read_fingerprints(ls);
  REQUIRE(lback.size() == 1);
  CHECK(lback[0] == lf);
}
