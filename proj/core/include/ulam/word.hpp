// Words of T^Q, (M,r)-balance, lie-string application and C-shadows.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulam/channel.hpp"
#include "ulam/exact.hpp"

namespace ulam {

// A short digit string over T = {0..t-1}.  Value type, fixed capacity.
class Word {
 public:
  static constexpr int kMaxLen = 20;

  Word() : len_(0) { digits_.fill(0); }
  Word(std::initializer_list<int> digits);

  // Lexicographic unranking: digit 0 is the most significant.
  static Word from_index(std::uint64_t index, int len, int t);
  static Word from_string(std::string_view s);  // "0121..."

  std::uint64_t index(int t) const;
  int length() const { return len_; }
  int operator[](int i) const { return digits_[i]; }
  void set(int i, int v) { digits_[i] = std::uint8_t(v); }
  void push_back(int v);
  Word concat(const Word& other) const;
  Word prefix(int len) const;
  Word suffix_from(int pos) const;
  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) {
    if (x.len_ != y.len_) return false;
    for (int i = 0; i < x.len_; ++i)
      if (x.digits_[i] != y.digits_[i]) return false;
    return true;
  }
  friend bool operator<(const Word& x, const Word& y);

 private:
  std::array<std::uint8_t, kMaxLen> digits_;
  std::int8_t len_;
};

struct BalanceSpec {
  int m = 1;      // number of sections M
  double r = 0;   // tolerance
  int t = 2;
  int q = 0;      // word length Q
};

// (Q mod M) sections of length ceil(Q/M) followed by floor(Q/M) ones.
std::vector<int> sections(int q, int m);

// r(Q,M,i) = sqrt(ceil(Q/M) * ln(M t 2^i) / 2); i may be real (eta*log2 q).
double r_tolerance(int q, int m, int t, double i);
// Enclosure form: r^2 = ceil(Q/M)/2 * (ln(Mt) + i*ln 2) with i rational.
Interval r_tolerance_enclosure(int q, int m, int t, const Rat& i, int prec);

bool is_balanced(const Word& w, const BalanceSpec& spec);

// Exact count of (M,r)-unbalanced words of T^Q by full enumeration.
std::uint64_t count_unbalanced(const BalanceSpec& spec, std::uint64_t cap);
std::uint64_t count_balanced(const BalanceSpec& spec, std::uint64_t cap);

// All w' with w -u-> w' (choose increasing positions i_1<...<i_j with
// w[i_l] = a_l, set w'[i_l] = b_l).  Sorted, duplicate-free.
std::vector<Word> apply_lie_string(const Word& w, const LieString& u);
// All w with w -u-> w'; equals applying the reverse-swapped string to w'.
std::vector<Word> preimage_lie_string(const Word& wp, const LieString& u);
// (b_1,a_1)...(b_j,a_j)
LieString reverse_swap(const LieString& u);

// The unique candidate lie string turning truth into response: the
// (truth[i], response[i]) pairs at differing positions, in order.
LieString mismatch_string(const Word& truth, const Word& response);

// C-shadow B(w,C): union over u in C of apply_lie_string(w,u).
std::vector<Word> shadow(const Word& w, const Channel& c);
std::uint64_t shadow_size(const Word& w, const Channel& c);

// b(Q,t,j) = sum_{l<=j} C(Q,l)(t-1)^l
unsigned long long ball_size(int q, int t, int j);

// G(Q,M,r,j) = C(M+j-1,j) ((1/t)ceil(Q/M) + r + k)^j
double g_bound(int q, int m, double r, int j, int k, int t);
// H(Q,M,r,j) = C(M,j) max(0, (1/t)ceil(Q/M) - (t-1)r - 2 - k)^j
double h_bound(int q, int m, double r, int j, int k, int t);
Interval g_bound_enclosure(int q, int m, const Interval& r, int j, int k, int t);
Interval h_bound_enclosure(int q, int m, const Interval& r, int j, int k, int t);

int hamming_distance(const Word& x, const Word& y);

// min d(w, w') over balanced w', searched radius by radius; nullopt if no
// balanced word lies within `cap` flips.
std::optional<int> distance_to_balanced(const Word& w, const BalanceSpec& spec,
                                        int cap);

}  // namespace ulam
