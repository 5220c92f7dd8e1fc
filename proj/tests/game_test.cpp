#include <doctest.h>

#include <functional>

#include "ulam/game.hpp"

using namespace ulam;

namespace {

Lie lie(int a, int b) { return Lie{std::uint8_t(a), std::uint8_t(b)}; }

Channel sym1() { return Channel::symmetric(2, 1); }

// Independent oracle for tiny two-batch games: enumerate Paul's first
// batch AND all second-batch functions explicitly.
bool two_batch_oracle(const Channel& c, long long n, int q1, int q2,
                      Variant variant) {
  SuffixFamily fam(c);
  std::uint64_t w1 = upow64(c.t(), q1), w2 = upow64(c.t(), q2);
  std::vector<std::size_t> first(std::size_t(n), 0);

  std::function<bool(const std::vector<std::size_t>&, std::uint64_t)> second_ok =
      [&](const std::vector<std::size_t>& firsts, std::uint64_t r1) {
        // elements alive after the first batch, with their classes
        Word response = Word::from_index(r1, q1, c.t());
        std::vector<int> cls(std::size_t(n), -1);
        std::vector<long long> alive;
        for (long long e = 0; e < n; ++e) {
          Word w = Word::from_index(firsts[std::size_t(e)], q1, c.t());
          int id = fam.walk(fam.root_id(), mismatch_string(w, response));
          if (fam.is_empty(id) || fam.min_length(id) > q2) continue;
          cls[std::size_t(e)] = id;
          alive.push_back(e);
        }
        if (alive.empty()) return variant == Variant::original;
        // all second-batch assignments of alive elements
        std::vector<std::size_t> z(alive.size(), 0);
        while (true) {
          bool good = true;
          for (std::uint64_t r2 = 0; r2 < w2 && good; ++r2) {
            Word zp = Word::from_index(r2, q2, c.t());
            long long survivors = 0;
            for (std::size_t i = 0; i < alive.size(); ++i) {
              Word zw = Word::from_index(z[i], q2, c.t());
              int id = fam.walk(cls[std::size_t(alive[i])], mismatch_string(zw, zp));
              survivors += !fam.is_empty(id) && fam.has_epsilon(id);
            }
            good = variant == Variant::original ? survivors <= 1 : survivors >= 1;
          }
          if (good) return true;
          std::size_t i = 0;
          while (i < z.size() && ++z[i] == w2) z[i++] = 0;
          if (i == z.size()) return false;
        }
      };

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t e,
                                                          std::size_t from) {
    if (e == first.size()) {
      for (std::uint64_t r1 = 0; r1 < w1; ++r1)
        if (!second_ok(first, r1)) return false;
      return true;
    }
    for (std::size_t w = from; w < w1; ++w) {
      first[e] = w;
      if (rec(e + 1, w)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("init_state places everything on the root channel") {
  SuffixFamily fam(sym1());
  StateVector s = init_state(fam, 5, 3);
  CHECK(s.counts == std::map<int, long long>{{fam.root_id(), 5}});
  CHECK(init_state(fam, 0, 3).counts.empty());

  SuffixFamily eps(Channel(2, {{}}));
  CHECK(init_state(eps, 1, 0).counts == std::map<int, long long>{{eps.root_id(), 1}});
  // forced-lie channel with no rounds left: the element is disqualified
  SuffixFamily forced(Channel(2, {{lie(0, 1)}}));
  CHECK(init_state(forced, 3, 0).counts.empty());
}

TEST_CASE("apply_round moves lied-to elements to suffix classes") {
  Channel c = sym1();
  SuffixFamily fam(c);
  StateVector s = init_state(fam, 2, 3);
  Question question;
  question.split[fam.root_id()] = {1, 1};
  StateVector next = apply_round(fam, s, question, 0);
  // the element in A_1 accrues (1,0); S_C((1,0)) = {e}
  int eps_id = fam.id_of(Channel(2, {{}})).value();
  CHECK(next.rounds_left == 2);
  CHECK(next.counts == std::map<int, long long>{{fam.root_id(), 1}, {eps_id, 1}});

  // everything in the answered part: nothing moves
  Question all0;
  all0.split[fam.root_id()] = {2, 0};
  StateVector same = apply_round(fam, s, all0, 0);
  CHECK(same.counts == s.counts);
  CHECK(same.rounds_left == 2);

  // malformed composition
  Question bad;
  bad.split[fam.root_id()] = {1, 0};
  CHECK_THROWS_AS(apply_round(fam, s, bad, 0), std::invalid_argument);
}

TEST_CASE("elements without time to finish a lie string are dropped") {
  // suffix {(0,1)} with one round left, truthful answer: min length 1 > 0
  Channel forced(2, {{lie(0, 1)}});
  SuffixFamily fam(forced);
  StateVector s = init_state(fam, 1, 1);
  Question q;
  q.split[fam.root_id()] = {1, 0};
  StateVector next = apply_round(fam, s, q, 0);
  CHECK(next.counts.empty());
}

TEST_CASE("terminal win conditions") {
  Channel c = sym1();
  SuffixFamily fam(c);
  int eps_id = fam.id_of(Channel(2, {{}})).value();
  StateVector one{{{eps_id, 1}}, 0};
  StateVector two{{{eps_id, 2}}, 0};
  StateVector none{{}, 0};
  CHECK(paul_wins_terminal(fam, one, Variant::original));
  CHECK_FALSE(paul_wins_terminal(fam, two, Variant::original));
  CHECK(paul_wins_terminal(fam, two, Variant::pathological));
  CHECK(paul_wins_terminal(fam, none, Variant::original));
  CHECK_FALSE(paul_wins_terminal(fam, none, Variant::pathological));
  StateVector mid{{{eps_id, 1}}, 1};
  CHECK_THROWS_AS(paul_wins_terminal(fam, mid, Variant::original), std::logic_error);
}

TEST_CASE("coarsened state groups by suffix order") {
  Channel c = Channel::symmetric(2, 2);
  SuffixFamily fam(c);
  int eps_id = fam.id_of(Channel(2, {{}})).value();
  int one_id = fam.step(fam.root_id(), lie(0, 1));
  StateVector s{{{fam.root_id(), 3}, {one_id, 2}, {eps_id, 7}}, 2};
  CoarseState cs = coarsen(fam, s);
  CHECK(cs.x == std::vector<long long>{3, 2, 7});
}

TEST_CASE("adaptive solver on the classic 1-lie channel") {
  CHECK(solve_adaptive(sym1(), 2, 3, Variant::original).paul_wins);
  CHECK_FALSE(solve_adaptive(sym1(), 3, 3, Variant::original).paul_wins);
  // q=5: sphere bound 32/6 -> n=5 winnable, 6 not (Pelc)
  MaxnResult m = optimal_n_adaptive(sym1(), 5, Variant::original, 32);
  CHECK(m.value.value() == 4);
}

TEST_CASE("degenerate original channel is a free win for Paul") {
  Channel forced(2, {{lie(0, 1)}});
  for (int q = 1; q <= 4; ++q)
    for (long long n : {1, 5, 16})
      CHECK(solve_adaptive(forced, n, q, Variant::original).paul_wins);
}

TEST_CASE("strategy tree is emitted within budget and replays to a win") {
  SolveOptions opts;
  opts.tree_node_budget = 1000;
  SolveResult r = solve_adaptive(sym1(), 2, 3, Variant::original, opts);
  REQUIRE(r.paul_wins);
  REQUIRE(r.tree);
  // walk every answer path; terminal states must be Paul wins
  SuffixFamily fam(sym1());
  std::function<void(const StrategyTree&, StateVector)> walk =
      [&](const StrategyTree& node, StateVector s) {
        if (node.children.empty()) {
          while (s.rounds_left > 0) s.rounds_left -= 1;  // no survivors path
          CHECK(paul_wins_terminal(fam, s, Variant::original));
          return;
        }
        for (int ans = 0; ans < 2; ++ans)
          walk(*node.children[ans], apply_round(fam, s, node.question, ans));
      };
  walk(*r.tree, init_state(fam, 2, 3));
}

TEST_CASE("memoized and plain solvers agree") {
  SolveOptions plain;
  plain.memoize = false;
  for (const Channel& c :
       {sym1(), Channel(2, {{}, {lie(0, 1)}}), Channel(2, {{lie(0, 1)}, {lie(1, 0)}})}) {
    for (long long n = 0; n <= 3; ++n)
      for (int q = 0; q <= 3; ++q)
        for (Variant v : {Variant::original, Variant::pathological})
          CHECK(solve_adaptive(c, n, q, v).paul_wins ==
                solve_adaptive(c, n, q, v, plain).paul_wins);
  }
}

TEST_CASE("pathological optimum is the least winning n") {
  // covering of T^3 by two radius-1 balls exists, one is too small
  MaxnResult m = optimal_n_adaptive(sym1(), 3, Variant::pathological, 16);
  CHECK(m.value.value() == 2);
}

TEST_CASE("monotonicity of adaptive outcomes") {
  Channel c = sym1();
  MaxnResult m = optimal_n_adaptive(c, 4, Variant::original, 32);
  long long best = m.value.value();
  for (long long n = 0; n <= best; ++n)
    CHECK(solve_adaptive(c, n, 4, Variant::original).paul_wins);
  CHECK_FALSE(solve_adaptive(c, best + 1, 4, Variant::original).paul_wins);
}

TEST_CASE("identical state vectors from different histories solve identically") {
  // two histories leading to the same (counts, rounds_left)
  Channel c = sym1();
  AdaptiveSolver solver(c, Variant::original);
  const SuffixFamily& fam = solver.family();
  StateVector a = init_state(fam, 4, 3);
  Question split22;
  split22.split[fam.root_id()] = {2, 2};
  StateVector via0 = apply_round(fam, a, split22, 0);
  StateVector via1 = apply_round(fam, a, split22, 1);
  CHECK(via0.counts == via1.counts);  // symmetric split
  CHECK(solver.solve_from(via0).paul_wins == solver.solve_from(via1).paul_wins);
}

TEST_CASE("two-batch search agrees with the explicit oracle") {
  for (long long n = 0; n <= 3; ++n) {
    for (Variant v : {Variant::original, Variant::pathological}) {
      CHECK(solve_two_batch(sym1(), n, 2, 1, v).paul_wins ==
            two_batch_oracle(sym1(), n, 2, 1, v));
      CHECK(solve_two_batch(sym1(), n, 1, 2, v).paul_wins ==
            two_batch_oracle(sym1(), n, 1, 2, v));
    }
  }
  // q2 = 0 reduces to the one-batch game
  CHECK(solve_two_batch(sym1(), 2, 3, 0, Variant::original).paul_wins);
  CHECK_FALSE(solve_two_batch(sym1(), 3, 3, 0, Variant::original).paul_wins);
}

TEST_CASE("two-batch win implies adaptive win") {
  for (long long n = 1; n <= 4; ++n) {
    if (solve_two_batch(sym1(), n, 2, 1, Variant::original).paul_wins)
      CHECK(solve_adaptive(sym1(), n, 3, Variant::original).paul_wins);
    if (solve_two_batch(sym1(), n, 2, 1, Variant::pathological).paul_wins)
      CHECK(solve_adaptive(sym1(), n, 3, Variant::pathological).paul_wins);
  }
}

TEST_CASE("node budget raises CapExceeded") {
  SolveOptions opts;
  opts.max_nodes = 10;
  CHECK_THROWS_AS(solve_adaptive(sym1(), 6, 6, Variant::original, opts), CapExceeded);
}

}  // TEST_SUITE
