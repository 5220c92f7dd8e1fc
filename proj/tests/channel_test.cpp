#include <doctest.h>

#include "ulam/channel.hpp"
#include "ulam/selftest.hpp"

using namespace ulam;

namespace {

Lie lie(int a, int b) { return Lie{std::uint8_t(a), std::uint8_t(b)}; }

// Example 1: 2-lie unidirectional channel
Channel unidir2() {
  return Channel(2, {{}, {lie(0, 1)}, {lie(1, 0)},
                     {lie(0, 1), lie(0, 1)}, {lie(1, 0), lie(1, 0)}});
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("construction validates and canonicalizes") {
  CHECK_THROWS_AS(Channel(2, {{lie(0, 0)}}), std::invalid_argument);
  CHECK_THROWS_AS(Channel(2, {{lie(0, 1)}, {lie(0, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Channel(2, {{lie(0, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(Channel(1, {}), std::invalid_argument);

  // set equality is key equality regardless of input order
  Channel a(2, {{lie(1, 0)}, {}, {lie(0, 1)}});
  Channel b(2, {{}, {lie(0, 1)}, {lie(1, 0)}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.order() == 1);
  CHECK(a.min_length() == 0);
  CHECK(a.contains_epsilon());
}

TEST_CASE("suffix_channel basics") {
  Channel c = unidir2();
  // S_C((0,1)) = {e, (0,1)}
  Channel s = suffix_channel(c, {lie(0, 1)});
  CHECK(s == Channel(2, {{}, {lie(0, 1)}}));
  // empty prefix returns C itself
  CHECK(suffix_channel(c, {}) == c);
  // no string extends (0,1)(1,0)
  CHECK(suffix_channel(c, {lie(0, 1), lie(1, 0)}).empty());
  // prefixes longer than the order die
  CHECK(suffix_channel(c, {lie(0, 1), lie(0, 1), lie(0, 1)}).empty());
  CHECK_THROWS_AS(suffix_channel(c, {Lie{2, 0}}), std::invalid_argument);
}

TEST_CASE("suffix_family enumerates distinct suffix channels") {
  Channel c = unidir2();
  std::vector<Channel> fam = suffix_family(c);
  CHECK(fam.size() == 5);  // C, {e,(0,1)}, {e,(1,0)}, {e}, empty
  int empties = 0;
  for (const Channel& ch : fam) empties += ch.empty();
  CHECK(empties == 1);

  CHECK(suffix_family(Channel(2, {{}})).size() == 2);          // {e}, empty
  CHECK(suffix_family(Channel(2, {{lie(0, 1)}})).size() == 3); // C, {e}, empty
}

TEST_CASE("stats of the unidirectional example") {
  ChannelStats st = stats(unidir2());
  CHECK(st.e == std::vector<long long>{1, 2, 2});
  CHECK(st.p[2][0] == 1);
  CHECK(st.p[1][1] == 2);
  CHECK(st.p[0][2] == 2);
  long long total = 0, expected_zero = 0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      total += st.p[i][j];
      if (!((i == 2 && j == 0) || (i == 1 && j == 1) || (i == 0 && j == 2)))
        expected_zero += st.p[i][j];
    }
  CHECK(expected_zero == 0);
  CHECK(total == 5);  // prefixes with nonempty suffix channel
  CHECK(st.p_totals == std::vector<long long>{2, 2, 1});

  ChannelStats eps = stats(Channel(2, {{}}));
  CHECK(eps.e == std::vector<long long>{1});
  CHECK(eps.p[0][0] == 1);
}

TEST_CASE("p vanishes beyond j > k - i") {
  ChannelStats st = stats(Channel::symmetric(2, 2));
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (j > 2 - i) CHECK(st.p[i][j] == 0);
}

TEST_CASE("non-degeneracy per Defn. 2") {
  Channel forced(2, {{lie(0, 1)}});
  CHECK_FALSE(is_nondegenerate(forced, Variant::original));       // no (1,b...) string
  CHECK_FALSE(is_nondegenerate(forced, Variant::pathological));   // no (a,0...) string
  CHECK(is_nondegenerate(unidir2(), Variant::original));          // epsilon clause
  CHECK(is_nondegenerate(Channel(3, {{}, {lie(0, 1), lie(0, 2)}}), Variant::original));
  // both single-letter forms present without epsilon
  Channel both(2, {{lie(0, 1)}, {lie(1, 0)}});
  CHECK(is_nondegenerate(both, Variant::original));
  CHECK(is_nondegenerate(both, Variant::pathological));
}

TEST_CASE("suffix order plus prefix length stays within the order") {
  Channel c = Channel::symmetric(2, 2);
  for (const Channel& ch : {c, unidir2()}) {
    SuffixFamily fam(ch);
    // walk all prefixes up to length k+1
    std::vector<std::pair<int, int>> frontier{{fam.root_id(), 0}};
    for (int depth = 0; depth <= ch.order(); ++depth) {
      std::vector<std::pair<int, int>> next;
      for (auto [id, len] : frontier) {
        if (fam.is_empty(id)) continue;
        CHECK(fam.state_order(id) + len <= ch.order());
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (a != b) next.emplace_back(fam.step(id, lie(a, b)), len + 1);
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("suffix automaton agrees with direct suffix computation") {
  Channel c = unidir2();
  SuffixFamily fam(c);
  LieString u{lie(0, 1)};
  int id = fam.walk(fam.root_id(), u);
  CHECK(fam.channel(id) == suffix_channel(c, u));
  CHECK(fam.id_of(suffix_channel(c, u)).value() == id);
  CHECK(fam.is_empty(fam.walk(fam.root_id(), {lie(0, 1), lie(1, 0)})));
  CHECK(fam.has_epsilon(fam.root_id()));
  CHECK(fam.min_length(fam.root_id()) == 0);
}

TEST_CASE("prefix associativity on random channels") {
  SelftestResult r = run_suffix_suite(12345, 400);
  CHECK(r.failures == 0);
}

TEST_CASE("permute_letters preserves structure") {
  Channel c = unidir2();
  Channel swapped = permute_letters(c, {1, 0});
  CHECK(swapped == c);  // the unidirectional channel is symmetric under 0<->1
  Channel z(2, {{}, {lie(0, 1)}});
  CHECK_FALSE(permute_letters(z, {1, 0}) == z);
}

}  // TEST_SUITE
