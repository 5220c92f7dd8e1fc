// Finite fields and code constructions for the second-batch packings.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ulam/errors.hpp"
#include "ulam/exact.hpp"
#include "ulam/word.hpp"

namespace ulam {

bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr);

// GF(p^e) for small prime powers, elements encoded 0..q-1 as base-p
// coefficient vectors of polynomials modulo a monic irreducible.
class GaloisField {
 public:
  explicit GaloisField(int q);  // throws std::invalid_argument otherwise

  int size() const { return q_; }
  int add(int x, int y) const { return add_[x][y]; }
  int sub(int x, int y) const { return add_[x][neg_[y]]; }
  int mul(int x, int y) const { return mul_[x][y]; }
  int neg(int x) const { return neg_[x]; }

 private:
  int q_, p_, e_;
  std::vector<std::vector<int>> add_, mul_;
  std::vector<int> neg_;
};

struct CodeResult {
  long long size = 0;            // number of codewords
  int length = 0;
  int claimed_distance = 1;      // 2R+1
  int verified_distance = 0;     // min pairwise distance actually measured
  bool materialized = false;
  std::vector<Word> words;       // present iff materialized
};

// Varshamov-style construction of a t-ary length-Q code with minimum
// distance 2R+1.  For prime-power t this is a greedy parity-check linear
// code of size >= t^(Q - ceil(log_t(1 + sum_{i<=2R-1} C(Q-1,i)(t-1)^i)));
// for composite t the best translate of the next-prime-power code
// restricted to T^Q.  The distance is verified, not assumed.
CodeResult varshamov_code(int t, int q, int radius,
                          std::uint64_t cap = 1ULL << 22);

// Exact maximum size of a t-ary length-Q code with min distance >= d,
// by exhaustive branch and bound.  Only for very small t^Q.
long long exact_max_code_size(int t, int q, int d, std::uint64_t cap = 4096);

}  // namespace ulam
