#include <random>

#include "doctest.h"
#include "mgl/enumerate.hpp"
#include "mgl/pieces.hpp"
#include "oracles.hpp"

using namespace mgl;

TEST_CASE("maximal pieces on the pinned examples") {
  Word abab = parse_word("abab", 2);
  Word ab = parse_word("ab", 2);
  Word aab = parse_word("aab", 2);
  Word abb = parse_word("abb", 2);

  CHECK(max_piece(abab, abab) == 3);
  CHECK(max_piece(aab, abb) == 2);
  CHECK(max_piece(ab, ab) == 0);

  CHECK(oracle::max_piece(abab, abab) == 3);
  CHECK(oracle::max_piece(aab, abb) == 2);
  CHECK(oracle::max_piece(ab, ab) == 0);

  int len = 0;
  auto witness = max_piece_witness(aab, abb, &len);
  REQUIRE(witness.has_value());
  CHECK(len == 2);
  CHECK(format_word(*witness) == "ab");
}

TEST_CASE("piece lengths agree with the brute-force oracle") {
  std::mt19937_64 rng(31);
  auto cyc5 = enumerate_cyc(2, 5);
  auto cyc3 = enumerate_cyc(2, 3);
  std::uniform_int_distribution<std::size_t> i5(0, cyc5.size() - 1), i3(0, cyc3.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Word& u = cyc5[i5(rng)];
    const Word& v = trial % 2 ? cyc3[i3(rng)] : cyc5[i5(rng)];
    CHECK(max_piece(u, v) == oracle::max_piece(u, v));
    CHECK(max_piece(u, u) == oracle::max_piece(u, u));
  }
}

TEST_CASE("piece computation is symmetric and conjugation invariant") {
  auto cyc4 = enumerate_cyc(2, 4);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, cyc4.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Word& u = cyc4[pick(rng)];
    const Word& v = cyc4[pick(rng)];
    int base = max_piece(u, v);
    CHECK(base == max_piece(v, u));
    CHECK(base == max_piece(cyclic_rotation(u, 1 + trial % 3), v));
    CHECK(base == max_piece(u.inverse(), v));
  }
}

TEST_CASE("check_c_prime on the pinned examples") {
  Rational sixth(1, 6);

  auto bad = check_c_prime({parse_word("abab", 2)}, sixth);
  CHECK_FALSE(bad.ok);
  CHECK(format_word(bad.witness) == "aba");
  CHECK(bad.piece_length == 3);

  CHECK(check_c_prime({parse_word("ab", 2)}, sixth).ok);
  CHECK(check_c_prime({parse_word("a", 2)}, sixth).ok);

  CHECK_THROWS_AS(check_c_prime({}, sixth), std::invalid_argument);
  CHECK_THROWS_AS(check_c_prime({parse_word("", 2)}, sixth), std::invalid_argument);
  CHECK_THROWS_AS(check_c_prime({parse_word("Aba", 2)}, sixth), std::invalid_argument);
}

TEST_CASE("check_c_prime is invariant under relator order, rotation and inversion") {
  Rational lam(1, 6);
  std::vector<Word> r{parse_word("abaB", 2), parse_word("bbbA", 2)};
  bool base = check_c_prime(r, lam).ok;
  CHECK(check_c_prime({r[1], r[0]}, lam).ok == base);
  CHECK(check_c_prime({cyclic_rotation(r[0], 2), r[1]}, lam).ok == base);
  CHECK(check_c_prime({r[0].inverse(), r[1]}, lam).ok == base);
  CHECK(check_c_prime({r[0], cyclic_rotation(r[1].inverse(), 1)}, lam).ok == base);
}

TEST_CASE("duplicate relator slots fail the condition") {
  Rational lam(1, 6);
  Word w = parse_word("ab", 2);
  auto rep = check_c_prime({w, cyclic_rotation(w, 1)}, lam);
  CHECK_FALSE(rep.ok);
  CHECK(rep.piece_length == 2);
}

TEST_CASE("rationals compare exactly at boundaries") {
  CHECK(Rational::parse("1/6") == Rational(1, 6));
  CHECK(Rational(2, 12) == Rational(1, 6));
  CHECK(length_below(0, Rational(1, 6), 1));
  CHECK_FALSE(length_below(1, Rational(1, 6), 6));  // 1 < 6/6 is false
  CHECK(length_below(1, Rational(1, 6), 7));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
