// Constructive two-batch strategies: balanced-block first batch, layered
// shifted-prefix ball packing for the second batch, singleton fill in the
// original variant and covering completion in the pathological one.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulam/bounds.hpp"
#include "ulam/channel.hpp"
#include "ulam/codes.hpp"
#include "ulam/game.hpp"
#include "ulam/pack_cover.hpp"
#include "ulam/word.hpp"

namespace ulam {

struct SynthParams {
  int q1 = 0, q2 = 0;
  int m1 = 1, m2 = 1;     // section counts M_1, M_2
  Rat eta1 = 2, eta2 = 2; // default k+1
  long long alpha = 1, alpha_prime = 0;
  int prec = 128;

  int q() const { return q1 + q2; }
  // M_i = ceil(q_i^{1/3}), eta_i = k+1
  static SynthParams defaults(const Channel& c, int q1, int q2,
                              long long alpha, long long alpha_prime = 0);
  double r1(int t) const;  // r(q1, M1, eta1 log2 q)
  double r2(int t) const;
  Interval r1_enclosure(int t) const;
  Interval r2_enclosure(int t) const;
  BalanceSpec balance1(int t) const { return {m1, r1(t), t, q1}; }
  BalanceSpec balance2(int t) const { return {m2, r2(t), t, q2}; }
};

struct ConditionReport {
  std::vector<BoundReport> lines;
  Tri packing = Tri::maybe;        // all radii
  Tri volume_original = Tri::maybe;
  Tri volume_pathological = Tri::maybe;
};

// Evaluates the packing condition for every radius 1 <= k-i <= k (with the
// constructive code size standing in for A_t), the original volume
// condition, and the pathological volume condition, all as rigorous
// enclosures.
ConditionReport check_conditions(const SynthParams& params, const Channel& c);

// The layered packing of T^{q2}: centers of radius-rho balls are a fixed
// one-block prefix of total length c_k followed by codewords of a distance
// 2 rho + 1 code on the remaining q2 - c_k digits.  Ball classes are
// pairwise disjoint because any two centers are further apart than the sum
// of their radii.
struct DPacking {
  int q2 = 0, k = 0, t = 2, c_k = 0;
  // centers[rho] for rho = 1..k (index 0 unused)
  std::vector<std::vector<Word>> centers;
};

// demands[rho] balls of radius rho (demands may be empty: take everything
// available).  When prune is given, centers whose whole ball is unbalanced
// are discarded.  Throws std::runtime_error when a demand cannot be met.
DPacking build_D_packing(int q2, int k, int t,
                         const std::vector<long long>& demands = {},
                         const BalanceSpec* prune = nullptr,
                         std::uint64_t code_cap = 1ULL << 22);

// View as ball placement (radius-rho class = full symmetric channel of
// order rho) for verification.
PlacementProblem d_packing_problem(const DPacking& d);
Placement d_packing_placement(const DPacking& d);

struct TwoBatchStrategy {
  Channel channel;
  Variant variant = Variant::original;
  int q1 = 0, q2 = 0;
  std::vector<Word> first_batch;               // element -> word of T^{q1}
  std::vector<std::vector<Word>> second_batch; // [response index][element]

  long long n() const { return static_cast<long long>(first_batch.size()); }
  explicit TwoBatchStrategy(Channel c) : channel(std::move(c)) {}
};

struct SynthResult {
  std::optional<TwoBatchStrategy> strategy;
  ConditionReport report;
  std::string reason;  // nonempty on refusal
  bool ok() const { return strategy.has_value(); }
};

SynthResult synth_original(long long n, const SynthParams& params, const Channel& c);
SynthResult synth_pathological(long long n, const SynthParams& params,
                               const Channel& c);

// Lemma-5 style witness.  Original variant: u = (a,b_1)...(a,b_j) in C and
// a partner w' with w -u-> w'.  Pathological: u = (a_1,b)...(a_j,b) and a
// partner w0 with w0 -u-> w.  Requires length(w) >= t(k-1)+1 and the
// corresponding non-degeneracy.
std::pair<LieString, Word> nondegen_witness(const Word& w, const Channel& c,
                                            Variant variant);

}  // namespace ulam
