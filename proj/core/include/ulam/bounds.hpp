// Closed-form bound evaluation in exact arithmetic: the sphere bound,
// the asymptotic winning thresholds, and the Varshamov chain.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulam/channel.hpp"
#include "ulam/exact.hpp"

namespace ulam {

struct BoundReport {
  std::string name;
  std::optional<Interval> lhs, rhs;
  std::string relation;  // e.g. "lhs <= rhs"
  Tri satisfied = Tri::maybe;
  std::string note;
  std::map<std::string, std::string> inputs;
};

// (k^2 + 3k - 2)/2, the prefix overhead of the layered ball packing
int c_k_constant(int k);

// t^{q+k} / (E_k(C) * C(q,k))
Rat sphere_bound(int q, int k, int t, long long ek);

// Varshamov lower bound on A_t(Q, 2R+1); t must be a prime power.
Int varshamov_lower(int t, int qlen, int radius);

// A_{t1}(Q,2R+1) >= (t1/t2)^Q * A_{t2}(Q,2R+1)
Rat alphabet_change_lower(int t1, int t2, int qlen, int radius, const Rat& a_t2);

// c9 * (2R-1)! / (2^{2R} (t-1)^{2R-1}) * t^{Q-c_k-1} / Q^{2R-1}, R >= 1
Rat asymp_varshamov(int t, int qlen, int radius, int k, const Rat& c9);

// Named constants c_1..c_14 with the inequality constraints the proofs
// impose on them (they depend on t, k and E_k).
struct BoundConstants {
  std::map<std::string, Rat> c;

  const Rat& at(const std::string& name) const;
  // smallest-margin defaults satisfying all proof inequalities
  static BoundConstants defaults(int t, int k, long long ek, int prec = 192);
  // throws std::invalid_argument when a mandated inequality fails
  void validate(int t, int k, long long ek, int prec = 192) const;
};

// The ratio (threshold / sphere bound) of the original-variant winning
// threshold: 1 - c2 sqrt(ln q) / q2^(1/3).
Interval theorem1_original_ratio(long q, long q2, const Rat& c2, int prec = 128);

std::vector<BoundReport> theorem1_thresholds(long q, long q1, long q2,
                                             const Channel& c,
                                             const BoundConstants& constants,
                                             int prec = 128);
std::vector<BoundReport> theorem2_thresholds(long q, long q1, long q2,
                                             const Channel& c,
                                             const BoundConstants& constants,
                                             int prec = 128);

}  // namespace ulam
