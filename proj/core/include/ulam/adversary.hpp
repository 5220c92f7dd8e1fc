// Carole's side: response sets, break searches, threshold reports.

#pragma once

#include <optional>
#include <vector>

#include "ulam/bounds.hpp"
#include "ulam/channel.hpp"
#include "ulam/synth.hpp"
#include "ulam/word.hpp"

namespace ulam {

struct ResponseSet {
  long long element = 0;
  std::vector<Word> words;  // full response strings w'z' of length q
};

// survivors of one full response string under the strategy
std::vector<long long> survivors_of(const TwoBatchStrategy& s, const Word& w1,
                                    const Word& w2);

// exact R(y) by simulation of all t^q response strings
ResponseSet response_set(const TwoBatchStrategy& s, long long element,
                         std::uint64_t cap = 1ULL << 24);

struct BreakWitness {
  Word response;  // full q-length response string
  std::vector<long long> survivors;
};

// a response with two survivors, or nullopt if {R(y)} is a packing
std::optional<BreakWitness> carole_break_original(const TwoBatchStrategy& s,
                                                  std::uint64_t cap = 1ULL << 26);
// a response with no survivor, or nullopt if {R(y)} is a covering
std::optional<BreakWitness> carole_break_pathological(
    const TwoBatchStrategy& s, std::uint64_t cap = 1ULL << 26);

struct CaroleParams {
  int m1 = 1, m2 = 1, m = 1;
  Rat eta1 = 2, eta2 = 2, eta = 2;
  int prec = 128;
  static CaroleParams defaults(const Channel& c, int q1, int q2);
};

// Both of Carole's volume thresholds plus the closed asymptotic forms.
std::vector<BoundReport> carole_threshold_report(int q1, int q2, const Channel& c,
                                                 const CaroleParams& params,
                                                 const BoundConstants& constants);

}  // namespace ulam
