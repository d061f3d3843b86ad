#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "lyndon2d/error.hpp"
#include "lyndon2d/lw2d.hpp"
#include "oracles.hpp"

using namespace lyndon2d;

namespace {

SummaryColumn sample_column() {
  return SummaryColumn::from_arrays({2, 3, 1, 3, 3, 2, 3, 2}, {0, 2, 0, 1, 1, 1, 2, 1});
}

SummaryColumn random_column(std::mt19937_64& rng, std::size_t max_m, Word max_p) {
  const std::size_t m = 1 + rng() % max_m;
  std::vector<Word> periods, lwpos;
  for (std::size_t i = 0; i < m; ++i) {
    periods.push_back(1 + rng() % max_p);
    lwpos.push_back(rng() % periods.back());
  }
  return SummaryColumn::from_arrays(std::move(periods), std::move(lwpos));
}

std::vector<Word> primes_to_100() {
  return {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
}

std::vector<Word> offsets_at(const SummaryColumn& col, Word c) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < col.rows(); ++i)
    out.push_back(((col.lwpos[i] + col.periods[i]) - c % col.periods[i]) % col.periods[i]);
  return out;
}

} // namespace

TEST_CASE("lcm_prefixes examples") {
  CHECK(lcm_prefixes(std::vector<Word>{2, 3, 1, 3, 3, 2, 3, 2}) ==
        std::vector<BigNat>{2, 6, 6, 6, 6, 6, 6, 6});
  CHECK(lcm_prefixes(std::vector<Word>{1, 1, 1}) == std::vector<BigNat>{1, 1, 1});
  CHECK(oracle::lcm_by_enumeration({4, 6}) == 12);
  CHECK(lcm_prefixes(std::vector<Word>{4, 6}) == std::vector<BigNat>{4, 12});
  CHECK_THROWS_AS(lcm_prefixes(std::vector<Word>{3, 0}), InvalidInput);
}

TEST_CASE("lcm_prefixes agrees with enumeration and is non-decreasing") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto col = random_column(rng, 10, 9);
    const auto prefix = lcm_prefixes(col.periods);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      std::vector<std::uint64_t> head(col.periods.begin(), col.periods.begin() + i + 1);
      REQUIRE(prefix[i] == oracle::lcm_by_enumeration(head));
      if (i > 0)
        REQUIRE(prefix[i] >= prefix[i - 1]);
    }
  }
}

TEST_CASE("mod_inverse examples") {
  CHECK(mod_inverse(2, 3) == 2);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK_THROWS_AS(mod_inverse(2, 4), NoInverse);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK(mod_inverse(0, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(3, 0), InvalidInput);
}

TEST_CASE("mod_inverse agrees with exhaustive search") {
  for (Word n = 1; n <= 60; ++n)
    for (Word a = 0; a < 3 * n; ++a) {
      std::optional<Word> expect;
      for (Word x = 0; x < n && !expect; ++x)
        if ((a * x) % n == 1 % n)
          expect = x;
      if (expect) {
        REQUIRE(mod_inverse(a, n) == *expect);
      } else {
        REQUIRE_THROWS_AS(mod_inverse(a, n), NoInverse);
      }
    }
  // big operand reduced first
  const BigNat big = BigNat(1) << 200;
  const Word inv = mod_inverse(big, 97);
  CHECK(static_cast<Word>(big % 97) * inv % 97 == 1);
}

TEST_CASE("conjugate_offsets examples") {
  const auto col = sample_column();
  CHECK(conjugate_offsets(col, 2) == std::vector<Word>{0, 0, 0, 2, 2, 1, 0, 1});
  CHECK(conjugate_offsets(col, 0) == col.lwpos);
  // columns of the table of LWpos arrays for this LCM-matrix
  CHECK(conjugate_offsets(col, 1) == std::vector<Word>{1, 1, 0, 0, 0, 0, 1, 0});
  CHECK(conjugate_offsets(col, 5) == std::vector<Word>{1, 0, 0, 2, 2, 0, 0, 0});
}

TEST_CASE("conjugate_offsets matches the LWpos array of the rotated LCM-matrix") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const auto rows = oracle::periodic_matrix(m, 16, 8, 3, rng);
    SummaryColumn col;
    for (const auto& r : rows) {
      col.periods.push_back(oracle::period(r));
      col.names.push_back(kNoName);
    }
    col.lwpos = oracle::lwpos_array(rows);
    const auto lcm = oracle::lcm_by_enumeration(col.periods);
    const Word c = rng() % lcm;
    oracle::Rows lcm_matrix;
    for (const auto& r : rows)
      lcm_matrix.push_back(oracle::extend(r, 2 * lcm + 16, c));
    REQUIRE(conjugate_offsets(col, c) == oracle::lwpos_array(lcm_matrix));
  }
}

TEST_CASE("naive_2dlw examples") {
  const auto lw = naive_2dlw(sample_column());
  CHECK(lw.offsets == std::vector<Word>{0, 0, 0, 2, 2, 1, 0, 1});
  CHECK(lw.z == 2);
  CHECK(lw.lcm() == 6);

  const auto ones = naive_2dlw(SummaryColumn::from_arrays({1, 1, 1}, {0, 0, 0}));
  CHECK(ones.offsets == std::vector<Word>{0, 0, 0});
  CHECK(ones.z == 0);

  const auto primes = primes_to_100();
  try {
    naive_2dlw(SummaryColumn::from_arrays(primes, std::vector<Word>(primes.size(), 0)));
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.lcm() == "2305567963945518424753102147331756070");
  }
}

TEST_CASE("alg1_2dlw examples") {
  const auto lw = alg1_2dlw(sample_column());
  CHECK(lw.offsets == std::vector<Word>{0, 0, 0, 2, 2, 1, 0, 1});
  CHECK(lw.z == 2);
  // after row 2, firstShift = (2 - 0) mod 3 = 2 and x = 1 moves z from 0 to 2
  const auto two = alg1_2dlw(SummaryColumn::from_arrays({2, 3}, {0, 2}));
  CHECK(two.z == 2);
  CHECK(two.offsets == std::vector<Word>{0, 0});

  const auto single = alg1_2dlw(SummaryColumn::from_arrays({7}, {5}));
  CHECK(single.offsets == std::vector<Word>{0});
  CHECK(single.z == 5);
  CHECK(alg1_2dlw(sample_column(), Alg1Bound::faithful) == lw);
}

TEST_CASE("alg2_2dlw examples and per-row internals") {
  const auto col = sample_column();
  CHECK(alg2_2dlw(col).offsets == std::vector<Word>{0, 0, 0, 2, 2, 1, 0, 1});
  CHECK(alg2_2dlw(col).z == 2);

  Alg2Accumulator acc;
  for (std::size_t i = 0; i < col.rows(); ++i)
    acc.push(col.periods[i], col.lwpos[i]);
  const auto& row2 = acc.steps()[1];
  CHECK(row2.gcd == 1);
  CHECK(acc.lcm_prefix()[0] / row2.gcd == 2);
  CHECK(row2.ell_mod_p == 2);
  CHECK(row2.p == 3);
  CHECK(row2.ell_inv == 2);
  CHECK((2 * row2.ell_inv) % 3 == 1);
  CHECK(row2.first_shift == 2);
  CHECK(row2.x == 1);
  CHECK(row2.offset == 0);

  // row 3 has period 1, which divides LCM[2] = 6
  const auto& row3 = acc.steps()[2];
  CHECK(row3.p == 1);
  CHECK(row3.ell_inv == 0);
  CHECK(row3.x == 0);
  CHECK(row3.offset == row3.first_shift);
  // row 4: period 3 divides 6
  CHECK(acc.steps()[3].p == 1);
  CHECK(acc.steps()[3].offset == acc.steps()[3].first_shift);

  const auto single = alg2_2dlw(SummaryColumn::from_arrays({7}, {5}));
  CHECK(single.offsets == std::vector<Word>{0});
  CHECK(single.z == 5);
}

TEST_CASE("invalid columns are rejected") {
  CHECK_THROWS_AS(alg2_2dlw(SummaryColumn::from_arrays({}, {})), InvalidInput);
  CHECK_THROWS_AS(alg2_2dlw(SummaryColumn::from_arrays({2}, {2})), InvalidInput);
  CHECK_THROWS_AS(alg1_2dlw(SummaryColumn::from_arrays({0}, {0})), InvalidInput);
  CHECK_THROWS_AS(naive_2dlw(SummaryColumn::from_arrays({2, 3}, {0})), InvalidInput);
}

TEST_CASE("three algorithms agree and the result is the minimal conjugate") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const auto col = random_column(rng, 12, 8);
    const auto naive = naive_2dlw(col);
    const auto a1 = alg1_2dlw(col);
    const auto a2 = alg2_2dlw(col);
    REQUIRE(naive == a1);
    REQUIRE(naive == a2);
    REQUIRE(alg1_2dlw(col, Alg1Bound::faithful) == a1);

    const auto lcm = static_cast<Word>(a2.lcm());
    REQUIRE(a2.offsets[0] == 0);
    REQUIRE(a2.z < a2.lcm());
    for (Word c = 0; c < lcm; ++c)
      REQUIRE(offsets_at(col, c) >= a2.offsets);
  }
}

TEST_CASE("the returned shift reproduces the offsets") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 1000; ++t) {
    const auto col = random_column(rng, 14, 16);
    const auto a2 = alg2_2dlw(col);
    REQUIRE(conjugate_offsets(col, a2.z) == a2.offsets);
    REQUIRE(conjugate_offsets(col, alg1_2dlw(col).z) == a2.offsets);
  }
}

TEST_CASE("each canonical offset is the minimum of the row's residue sequence") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    const auto col = random_column(rng, 12, 12);
    Alg2Accumulator acc;
    BigNat prev_lcm = 1;
    BigNat z_sum = 0;
    for (std::size_t i = 0; i < col.rows(); ++i) {
      const auto& step = acc.push(col.periods[i], col.lwpos[i]);
      z_sum += BigNat(step.x) * prev_lcm;
      if (i > 0) {
        const Word p = col.periods[i];
        const Word g = std::gcd(static_cast<Word>(prev_lcm % p), p);
        REQUIRE(step.gcd == g);
        REQUIRE(step.offset == step.first_shift % g);
        REQUIRE(step.offset < g);
        // explicit minimum of S[x] = (f - LCM[i-1] x) mod p over one period
        Word best = p, best_x = 0;
        for (Word x = 0; x < p / g; ++x) {
          const Word v = static_cast<Word>(
              ((BigNat(step.first_shift) - prev_lcm * x) % p + p) % p);
          if (v < best) {
            best = v;
            best_x = x;
          }
        }
        REQUIRE(step.offset == best);
        REQUIRE(step.x == best_x);
        // shift bound, termwise
        REQUIRE(BigNat(step.x) * prev_lcm < acc.lcm());
      }
      prev_lcm = acc.lcm();
    }
    REQUIRE(acc.z() == z_sum);
    REQUIRE(acc.z() < acc.lcm());
  }
}

TEST_CASE("canonical offsets are invariant under conjugation") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 1000; ++t) {
    const auto col = random_column(rng, 12, 9);
    const auto base = alg2_2dlw(col);
    const BigNat c = BigNat(rng() % 100000);
    SummaryColumn shifted = col;
    shifted.lwpos = conjugate_offsets(col, c);
    const auto moved = alg2_2dlw(shifted);
    REQUIRE(moved.offsets == base.offsets);
    REQUIRE(moved.z == ((base.z - c) % base.lcm() + base.lcm()) % base.lcm());
  }
}

TEST_CASE("all conjugates of an LCM-matrix have distinct LWpos arrays") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto col = random_column(rng, 8, 8);
    const auto lcm = static_cast<Word>(lcm_prefixes(col.periods).back());
    std::set<std::vector<Word>> seen;
    for (Word c = 0; c < lcm; ++c)
      seen.insert(conjugate_offsets(col, c));
    REQUIRE(seen.size() == lcm);
  }
}

TEST_CASE("exponential LCM: fast algorithms agree, naive and faithful hit the cap") {
  const auto primes = primes_to_100();
  std::mt19937_64 rng(37);
  std::vector<Word> lwpos;
  for (const auto p : primes)
    lwpos.push_back(rng() % p);
  const auto col = SummaryColumn::from_arrays(primes, lwpos);
  const auto a1 = alg1_2dlw(col);
  const auto a2 = alg2_2dlw(col);
  CHECK(a1 == a2);
  CHECK(a2.lcm() > (BigNat(1) << 64));
  CHECK(conjugate_offsets(col, a2.z) == a2.offsets);
  // distinct primes: every residue sequence reaches 0
  CHECK(a2.offsets == std::vector<Word>(primes.size(), 0));
  CHECK_THROWS_AS(naive_2dlw(col), CapExceeded);
  CHECK_THROWS_AS(alg1_2dlw(col, Alg1Bound::faithful), CapExceeded);
}

TEST_CASE("materialize_lcm_matrix examples") {
  const auto m = oracle::sample_matrix();
  const auto lcm = materialize_lcm_matrix(m);
  REQUIRE(lcm.size() == 8);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(lcm[i] == m[i].substr(0, 6));

  const std::vector<std::string> as{"aaaa", "aaaa"};
  CHECK(materialize_lcm_matrix(as) == std::vector<std::string>{"a", "a"});

  const std::vector<std::string> ext{"abab", "bbab"};
  CHECK_THROWS_AS(materialize_lcm_matrix(ext), NotSufficientlyPeriodic);
  const std::vector<std::string> ext2{"abab", "abca"};
  CHECK_THROWS_AS(materialize_lcm_matrix(ext2), NotSufficientlyPeriodic);

  // width 6, periods 2 and 3 -> LCM 6; rows already that wide
  const std::vector<std::string> grow{"abababab", "abcabcab"};
  const auto g = materialize_lcm_matrix(grow);
  CHECK(g == std::vector<std::string>{"ababab", "abcabc"});
  // periods 3 and 4 on width 8 -> extended to 12 columns
  const std::vector<std::string> wider{"abcabcab", "aabbaabb"};
  const auto w = materialize_lcm_matrix(wider);
  CHECK(w[0] == oracle::extend(wider[0], 12));
  CHECK(w[1] == oracle::extend(wider[1], 12));
  CHECK(w[0] == "abcabcabcabc");

  const std::vector<std::string> ragged{"aaaa", "aa"};
  CHECK_THROWS_AS(materialize_lcm_matrix(ragged), InvalidInput);
  CHECK_THROWS_AS(materialize_lcm_matrix(grow, 5), CapExceeded);
}
