// Exact play and exhaustive solving of the liar game.
//
// Elements with the same suffix channel are interchangeable, so a game
// state is the vector of counts per suffix channel plus the number of
// rounds left, and Paul's questions are per-class t-part compositions.
// Elements are dropped the moment they can no longer complete a string
// of the channel in the remaining rounds.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ulam/channel.hpp"
#include "ulam/errors.hpp"
#include "ulam/pack_cover.hpp"
#include "ulam/word.hpp"

namespace ulam {

struct StateVector {
  std::map<int, long long> counts;  // suffix-family id -> count
  int rounds_left = 0;

  long long total() const;
  friend bool operator==(const StateVector&, const StateVector&) = default;
};

// Drop classes that are disqualified: the empty suffix channel, or a
// shortest completion longer than the rounds left.
StateVector normalize(const SuffixFamily& fam, StateVector s);

StateVector init_state(const SuffixFamily& fam, long long n, int q);

struct Question {
  // class id -> composition (part sizes A_0..A_{t-1}) of that class count
  std::map<int, std::vector<long long>> split;
};

StateVector apply_round(const SuffixFamily& fam, const StateVector& s,
                        const Question& question, int answer);

// Requires rounds_left == 0.
bool paul_wins_terminal(const SuffixFamily& fam, const StateVector& s,
                        Variant variant);

struct CoarseState {
  std::vector<long long> x;  // x_0..x_k, x_i = count at suffix order k-i
};
CoarseState coarsen(const SuffixFamily& fam, const StateVector& s);

struct StrategyTree {
  Question question;
  // children[answer]; empty at the leaves
  std::vector<std::unique_ptr<StrategyTree>> children;
};

struct SolveOptions {
  std::uint64_t max_nodes = 100'000'000;
  bool memoize = true;
  // emit a winning strategy tree when the tree stays below this many nodes
  std::uint64_t tree_node_budget = 0;
};

struct SolveResult {
  bool paul_wins = false;
  std::uint64_t nodes = 0;
  std::unique_ptr<StrategyTree> tree;
};

// Exact minimax with memoization on (state, rounds_left).
class AdaptiveSolver {
 public:
  AdaptiveSolver(const Channel& c, Variant variant, SolveOptions opts = {});

  SolveResult solve(long long n, int q);
  SolveResult solve_from(const StateVector& s);

  const SuffixFamily& family() const { return fam_; }

 private:
  bool paul_wins(const StateVector& s);

  SuffixFamily fam_;
  Variant variant_;
  SolveOptions opts_;
  std::uint64_t nodes_ = 0;
  std::map<std::pair<std::vector<long long>, int>, bool> memo_;
};

SolveResult solve_adaptive(const Channel& c, long long n, int q, Variant variant,
                           const SolveOptions& opts = {});

// Largest n for which Paul wins the original adaptive game (monotone
// decreasing in n), or smallest such n in the pathological variant
// (monotone increasing).  nullopt when no n in [0, n_cap] wins / the
// variant-appropriate boundary does not exist below the cap.
struct MaxnResult {
  std::optional<long long> value;
  bool capped = false;  // original: Paul still wins at n_cap
};
MaxnResult optimal_n_adaptive(const Channel& c, int q, Variant variant,
                              long long n_cap, const SolveOptions& opts = {});

struct TwoBatchOptions {
  std::uint64_t max_assignments = 50'000'000;
  std::uint64_t max_words = 1ULL << 22;
  PackSearchOptions pack;
};

struct TwoBatchStrategy;  // defined in synth.hpp

struct TwoBatchResult {
  bool paul_wins = false;
  // winning first-batch assignment (element -> word), when Paul wins
  std::vector<Word> first_batch;
  std::uint64_t assignments_tried = 0;
};

// Exhaustive search over first-batch assignments (multisets of words);
// second batches are decided by packing/covering existence.
TwoBatchResult solve_two_batch(const Channel& c, long long n, int q1, int q2,
                               Variant variant, const TwoBatchOptions& opts = {});

}  // namespace ulam
