// Seeded randomized property checks, shared by the CLI selftest
// subcommand and the test suites.

#pragma once

#include <cstdint>
#include <string>

namespace ulam {

struct SelftestResult {
  long long cases = 0;
  long long failures = 0;
  std::string log;  // first few failure descriptions
  bool ok() const { return failures == 0; }
};

// Shadow-count bounds (H <= |w -u-> .| <= G and the shadow-sum form) on
// random (w,u,C) with stems near the balanced set, plus adjointness of
// apply/preimage and the ball identity |B(w, all strings <= j)| = b(Q,t,j).
SelftestResult run_lemma4_suite(std::uint64_t seed, long long cases);

// Channel algebra: S_{S_C(u)}(v) = S_C(uv) on random channels/prefixes.
SelftestResult run_suffix_suite(std::uint64_t seed, long long cases);

}  // namespace ulam
