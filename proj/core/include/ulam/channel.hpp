// Lie strings and channels.
//
// A lie over the alphabet T = {0..t-1} is a pair (a,b) with a != b: the
// truth was a, the reply was b.  A channel is a finite duplicate-free set
// of lie strings of bounded length; its order is the maximum length
// present.  The suffix channel S_C(u) = {v : uv in C} tracks how a
// partially-lied-to element can still complete its string, and the set of
// all suffix channels forms a finite automaton over single lies.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulam {

enum class Variant { original, pathological };

struct Lie {
  std::uint8_t truth;  // a
  std::uint8_t reply;  // b

  friend bool operator==(const Lie&, const Lie&) = default;
  friend auto operator<=>(const Lie&, const Lie&) = default;
};

// The empty vector is the empty lie string epsilon.
using LieString = std::vector<Lie>;

// Canonical order: by length, then lexicographic on (a,b) pairs.
bool lie_string_less(const LieString& x, const LieString& y);

std::string lie_string_str(const LieString& u);  // "(0,1)(1,0)" or "e"

class Channel {
 public:
  // Validates letters < t, a != b, sorts canonically, rejects duplicates.
  Channel(int t, std::vector<LieString> strings);

  // The empty channel over alphabet t (the "disqualified" sentinel).
  static Channel empty_channel(int t);
  // All lie strings of length <= k (the symmetric k-lie channel).
  static Channel symmetric(int t, int k);

  int t() const { return t_; }
  bool empty() const { return strings_.empty(); }
  // Order o(C): defined only for nonempty channels.
  int order() const;
  int min_length() const;  // min |u| over u in C; nonempty channels only
  bool contains(const LieString& u) const;
  bool contains_epsilon() const;
  const std::vector<LieString>& strings() const { return strings_; }
  std::size_t size() const { return strings_.size(); }

  // Canonical key; two channels are equal as sets iff keys match.
  std::string key() const;

  friend bool operator==(const Channel& x, const Channel& y) {
    return x.t_ == y.t_ && x.strings_ == y.strings_;
  }

 private:
  int t_;
  std::vector<LieString> strings_;
};

struct ChannelStats {
  // e[j] = E_j(C) = |C ∩ L(t)^j|, j = 0..k
  std::vector<long long> e;
  // p[i][j] = |{u in L(t)^j : o(S_C(u)) = i}|; zero when j > k-i
  std::vector<std::vector<long long>> p;
  // p_totals[i] = p_i(C) = sum_j p[i][j]
  std::vector<long long> p_totals;
};

// S_C(u); returns the empty channel when no string in C extends u.
Channel suffix_channel(const Channel& c, const LieString& u);

// All distinct nonempty suffix channels plus the empty channel.
std::vector<Channel> suffix_family(const Channel& c);

ChannelStats stats(const Channel& c);

bool is_nondegenerate(const Channel& c, Variant variant);

// Apply the letter permutation perm (size t) to every lie of every string.
Channel permute_letters(const Channel& c, const std::vector<int>& perm);

// The suffix channels of C as an automaton over single lies.  State 0 is
// C itself; the empty channel is a regular (dead) state.
class SuffixFamily {
 public:
  explicit SuffixFamily(Channel c);

  const Channel& root() const { return states_[0]; }
  int root_id() const { return 0; }
  int empty_id() const { return empty_id_; }
  int size() const { return static_cast<int>(states_.size()); }
  int t() const { return t_; }
  int order() const { return k_; }  // order of the root channel

  const Channel& channel(int id) const { return states_.at(id); }
  bool is_empty(int id) const { return id == empty_id_; }
  bool has_epsilon(int id) const { return has_epsilon_.at(id); }
  int state_order(int id) const;   // throws on the empty state
  int min_length(int id) const;    // throws on the empty state

  // id of S_{C_id}((a,b))
  int step(int id, Lie lie) const;
  int walk(int id, const LieString& u) const;

  // id of a channel equal (as a set) to ch, or nullopt if not in the family
  std::optional<int> id_of(const Channel& ch) const;

 private:
  int t_;
  int k_;
  int empty_id_;
  std::vector<Channel> states_;
  std::vector<bool> has_epsilon_;
  std::vector<int> orders_;      // -1 for the empty state
  std::vector<int> min_len_;     // large sentinel for the empty state
  std::vector<std::vector<int>> delta_;  // [id][a*t+b] -> id
  std::map<std::string, int> index_;
};

}  // namespace ulam
