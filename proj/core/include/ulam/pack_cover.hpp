// Exact packing / covering search for C-shadows in T^Q.
//
// A demand (x_{C'} : C') asks for x_{C'} shadows of each suffix channel
// C'.  A packing needs all placed shadows pairwise disjoint; a covering
// needs their union to be all of T^Q.  Existence of either is exactly
// Paul winning the one-batch original / pathological game from that
// state vector, which is what the equivalence tests drive.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ulam/channel.hpp"
#include "ulam/errors.hpp"
#include "ulam/word.hpp"

namespace ulam {

// Fixed-size bitset over word indices of T^Q.
class WordMask {
 public:
  WordMask() : n_(0) {}
  explicit WordMask(std::uint64_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return n_; }
  bool test(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { bits_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(std::uint64_t i) { bits_[i >> 6] &= ~(1ULL << (i & 63)); }
  std::uint64_t count() const;
  bool intersects(const WordMask& other) const;
  void or_with(const WordMask& other);
  void andnot_with(const WordMask& other);  // this &= ~other
  bool all() const { return count() == n_; }
  bool none() const;
  // smallest index not set, or n_ if full
  std::uint64_t first_unset() const;

  friend bool operator==(const WordMask&, const WordMask&) = default;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> bits_;
};

enum class PlacementMode { packing, covering };

struct PlacementProblem {
  int q = 0;
  int t = 2;
  PlacementMode mode = PlacementMode::packing;
  // canonical channel classes with demanded multiplicities
  std::vector<std::pair<Channel, long long>> demand;
};

struct Placement {
  // (stem, index into problem.demand)
  std::vector<std::pair<Word, int>> stems;
};

struct PackSearchOptions {
  std::uint64_t max_words = 1ULL << 22;  // cap on t^Q
  std::uint64_t max_nodes = 200'000'000;
  bool symmetry_reduction = true;
};

// Shadow bitmask of every stem of T^Q for one channel class.
std::vector<WordMask> shadow_table(const Channel& c, int q);

bool verify_placement(const PlacementProblem& p, const Placement& pl);

// Exhaustive backtracking search; nullopt is a proof of nonexistence.
std::optional<Placement> find_placement(const PlacementProblem& p,
                                        const PackSearchOptions& opts = {});

// One-batch strategy: element i is assigned a truthful word and a suffix
// channel; round i of the batch asks for digit i of each element's word.
struct OneBatchStrategy {
  int q = 0;
  int t = 2;
  std::vector<std::pair<Word, Channel>> assignment;  // per element
};

OneBatchStrategy strategy_from_placement(const PlacementProblem& p,
                                         const Placement& pl);
std::pair<PlacementProblem, Placement> placement_from_strategy(
    const OneBatchStrategy& s, PlacementMode mode);

// Per-round questions: questions[i][part] = element ids in A_part.
std::vector<std::vector<std::vector<int>>> questions_of(const OneBatchStrategy& s);

}  // namespace ulam
