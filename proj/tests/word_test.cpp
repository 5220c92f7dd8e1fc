#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ulam/selftest.hpp"
#include "ulam/word.hpp"

using namespace ulam;

namespace {

Lie lie(int a, int b) { return Lie{std::uint8_t(a), std::uint8_t(b)}; }

// brute-force preimage by scanning all of T^Q
std::vector<Word> preimage_oracle(const Word& target, const LieString& u, int t) {
  std::vector<Word> out;
  std::uint64_t total = upow64(t, target.length());
  for (std::uint64_t i = 0; i < total; ++i) {
    Word w = Word::from_index(i, target.length(), t);
    std::vector<Word> image = apply_lie_string(w, u);
    if (std::find(image.begin(), image.end(), target) != image.end())
      out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_SUITE("word") {

TEST_CASE("word representation round-trips") {
  Word w = Word::from_index(11, 4, 2);  // 1011
  CHECK(w.str() == "1011");
  CHECK(w.index(2) == 11);
  CHECK(Word::from_string("1011") == w);
  CHECK(w.prefix(2).str() == "10");
  CHECK(w.suffix_from(2).str() == "11");
  CHECK(w.concat(Word::from_string("2")).str() == "10112");
}

TEST_CASE("sections split with long sections first") {
  CHECK(sections(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(sections(6, 3) == std::vector<int>{2, 2, 2});
  CHECK(sections(5, 1) == std::vector<int>{5});
  CHECK_THROWS_AS(sections(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(sections(3, 0), std::invalid_argument);
}

TEST_CASE("r_tolerance matches a high-precision evaluation") {
  // sqrt(25 ln(16) / 2): enclosure computed independently through mpfr
  Interval enc = r_tolerance_enclosure(100, 4, 2, Rat(1), 192);
  double r = r_tolerance(100, 4, 2, 1.0);
  CHECK(std::abs(r - enc.mid()) < 1e-9);
  CHECK(r == doctest::Approx(5.887051).epsilon(1e-6));

  // ln(M t 2^i) = ln 8 when M=1, t=2, i=2
  CHECK(r_tolerance(1, 1, 2, 2.0) == doctest::Approx(std::sqrt(std::log(8.0) / 2)));
  // monotone in i
  CHECK(r_tolerance(10, 2, 2, 2.0) > r_tolerance(10, 2, 2, 1.0));
}

TEST_CASE("is_balanced counts per section") {
  BalanceSpec spec{2, 0.5, 2, 6};
  CHECK_FALSE(is_balanced(Word::from_string("000111"), spec));  // 3 > 1.5+0.5
  CHECK(is_balanced(Word::from_string("010101"), spec));
  CHECK(is_balanced(Word::from_string("0101"), BalanceSpec{1, 0.0, 2, 4}));
  // r >= Q accepts everything
  BalanceSpec loose{2, 6.0, 2, 6};
  for (std::uint64_t i = 0; i < 64; ++i)
    CHECK(is_balanced(Word::from_index(i, 6, 2), loose));
}

TEST_CASE("count_unbalanced by enumeration") {
  CHECK(count_unbalanced(BalanceSpec{1, 2.0, 2, 4}, 1 << 20) == 0);
  // Q=2, M=1, r=0: threshold 1, words 00 and 11 unbalanced
  CHECK(count_unbalanced(BalanceSpec{1, 0.0, 2, 2}, 1 << 20) == 2);
  // Chernoff property at a spot
  for (int i : {1, 2}) {
    BalanceSpec spec{2, r_tolerance(10, 2, 2, double(i)), 2, 10};
    CHECK(count_unbalanced(spec, 1 << 20) * (1ULL << i) < (1ULL << 10));
  }
  CHECK_THROWS_AS(count_unbalanced(BalanceSpec{1, 0.0, 2, 14}, 100), CapExceeded);
}

TEST_CASE("apply_lie_string chooses increasing positions") {
  std::vector<Word> r = apply_lie_string(Word::from_string("00"), {lie(0, 1)});
  CHECK(r == std::vector<Word>{Word::from_string("01"), Word::from_string("10")});
  CHECK(apply_lie_string(Word::from_string("0101"), {}) ==
        std::vector<Word>{Word::from_string("0101")});
  CHECK(apply_lie_string(Word::from_string("11"), {lie(0, 1)}).empty());
  // two lies in order
  std::vector<Word> two =
      apply_lie_string(Word::from_string("00"), {lie(0, 1), lie(0, 1)});
  CHECK(two == std::vector<Word>{Word::from_string("11")});
}

TEST_CASE("preimage agrees with the brute-force oracle") {
  // preimage of 10 under (0,1): only 00 (the lie position must show reply 1)
  std::vector<Word> p = preimage_lie_string(Word::from_string("10"), {lie(0, 1)});
  CHECK(p == preimage_oracle(Word::from_string("10"), {lie(0, 1)}, 2));
  CHECK(p == std::vector<Word>{Word::from_string("00")});
  CHECK(preimage_lie_string(Word::from_string("00"), {lie(0, 1)}).empty());
  CHECK(preimage_lie_string(Word::from_string("01"), {}) ==
        std::vector<Word>{Word::from_string("01")});
  // random spot checks over T^4, t=3
  for (std::uint64_t i = 0; i < 81; i += 7) {
    Word target = Word::from_index(i, 4, 3);
    LieString u{lie(2, 0), lie(0, 1)};
    CHECK(preimage_lie_string(target, u) == preimage_oracle(target, u, 3));
  }
}

TEST_CASE("mismatch_string is the unique connecting lie string") {
  Word w = Word::from_string("0120");
  Word wp = Word::from_string("0221");
  LieString u = mismatch_string(w, wp);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == lie(1, 2));
  CHECK(u[1] == lie(0, 1));
  std::vector<Word> image = apply_lie_string(w, u);
  CHECK(std::find(image.begin(), image.end(), wp) != image.end());
}

TEST_CASE("shadows union lie-string images") {
  Channel c(2, {{}, {lie(0, 1)}});
  std::vector<Word> b = shadow(Word::from_string("00"), c);
  CHECK(b == std::vector<Word>{Word::from_string("00"), Word::from_string("01"),
                               Word::from_string("10")});
  Channel only_eps(2, {{}});
  CHECK(shadow(Word::from_string("0110"), only_eps) ==
        std::vector<Word>{Word::from_string("0110")});
  // distinct lie strings produce disjoint images: shadow size is the sum
  Channel sym = Channel::symmetric(2, 2);
  for (std::uint64_t i = 0; i < 16; ++i) {
    Word w = Word::from_index(i, 4, 2);
    std::uint64_t total = 0;
    for (const LieString& u : sym.strings()) total += apply_lie_string(w, u).size();
    CHECK(shadow(w, sym).size() == total);
  }
}

TEST_CASE("the j-ball is the shadow of the full channel") {
  Channel ball2 = Channel::symmetric(3, 2);
  for (std::uint64_t i = 0; i < 81; i += 5) {
    Word w = Word::from_index(i, 4, 3);
    CHECK(shadow(w, ball2).size() == ball_size(4, 3, 2));
  }
}

TEST_CASE("ball_size closed form") {
  CHECK(ball_size(3, 2, 1) == 4);
  CHECK(ball_size(7, 2, 0) == 1);
  CHECK(ball_size(7, 2, 1) == 8);
  CHECK(ball_size(4, 3, 2) == 1 + 4 * 2 + 6 * 4);
}

TEST_CASE("G and H bounds") {
  CHECK(g_bound(100, 4, 5.8866, 0, 1, 2) == 1.0);
  CHECK(h_bound(100, 4, 5.8866, 0, 1, 2) == 1.0);
  CHECK(g_bound(100, 4, 5.8866, 1, 1, 2) == doctest::Approx(77.5464));
  CHECK(h_bound(100, 4, 5.8866, 1, 1, 2) == doctest::Approx(14.4536));
  // the inner quantity clamps at zero instead of going negative
  CHECK(h_bound(4, 2, 5.0, 2, 1, 2) == 0.0);
  Interval g = g_bound_enclosure(100, 4, Interval(Rat(58866, 10000)), 1, 1, 2);
  CHECK(g.lo.get_d() == doctest::Approx(77.5464));
}

TEST_CASE("hamming distance and distance to the balanced set") {
  CHECK(hamming_distance(Word::from_string("000"), Word::from_string("111")) == 3);
  CHECK(hamming_distance(Word::from_string("0102"), Word::from_string("0102")) == 0);
  BalanceSpec spec{1, 0.5, 2, 4};
  CHECK(distance_to_balanced(Word::from_string("0000"), spec, -1) == 2);
  CHECK(distance_to_balanced(Word::from_string("0011"), spec, -1) == 0);
  CHECK(distance_to_balanced(Word::from_string("0001"), spec, -1) == 1);
  // cap cuts the search off
  CHECK_FALSE(distance_to_balanced(Word::from_string("0000"), spec, 1).has_value());
  // unreachable balanced set
  BalanceSpec tight{1, 0.1, 2, 3};  // threshold 1.6, but some letter has >= 2
  CHECK_FALSE(distance_to_balanced(Word::from_string("000"), tight, -1).has_value());
}

TEST_CASE("lemma 4 style bounds hold on randomized cases") {
  SelftestResult r = run_lemma4_suite(99, 300);
  CHECK(r.cases == 300);
  CHECK(r.failures == 0);
}

TEST_CASE("nonempty image for non-degenerate channels (lemma 5 direction)") {
  // original: every w has some u in C applicable
  Channel both(2, {{lie(0, 1)}, {lie(1, 0)}});
  int k = both.order();
  int q = 2 * (k - 1) + 1;  // t(k-1)+1
  for (std::uint64_t i = 0; i < upow64(2, q); ++i) {
    Word w = Word::from_index(i, q, 2);
    CHECK_FALSE(shadow(w, both).empty());
    // pathological analog with preimages
    std::size_t preimages = 0;
    for (const LieString& u : both.strings())
      preimages += preimage_lie_string(w, u).size();
    CHECK(preimages > 0);
  }
}

}  // TEST_SUITE
