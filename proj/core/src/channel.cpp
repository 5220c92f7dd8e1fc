#include "ulam/channel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ulam {

bool lie_string_less(const LieString& x, const LieString& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::string lie_string_str(const LieString& u) {
  if (u.empty()) return "e";
  std::ostringstream os;
  for (const Lie& l : u)
    os << "(" << int(l.truth) << "," << int(l.reply) << ")";
  return os.str();
}

Channel::Channel(int t, std::vector<LieString> strings) : t_(t) {
  if (t < 2) throw std::invalid_argument("Channel: t must be >= 2");
  for (const LieString& u : strings) {
    for (const Lie& l : u) {
      if (l.truth >= t || l.reply >= t)
        throw std::invalid_argument("Channel: letter out of range");
      if (l.truth == l.reply)
        throw std::invalid_argument("Channel: lie with a == b");
    }
  }
  std::sort(strings.begin(), strings.end(), lie_string_less);
  if (std::adjacent_find(strings.begin(), strings.end()) != strings.end())
    throw std::invalid_argument("Channel: duplicate lie string");
  strings_ = std::move(strings);
}

Channel Channel::empty_channel(int t) { return Channel(t, {}); }

Channel Channel::symmetric(int t, int k) {
  std::vector<LieString> out;
  std::vector<LieString> level{LieString{}};
  out.push_back(LieString{});
  for (int j = 1; j <= k; ++j) {
    std::vector<LieString> next;
    for (const LieString& u : level) {
      for (int a = 0; a < t; ++a) {
        for (int b = 0; b < t; ++b) {
          if (a == b) continue;
          LieString v = u;
          v.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
          next.push_back(v);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return Channel(t, std::move(out));
}

int Channel::order() const {
  if (empty()) throw std::logic_error("order() of empty channel");
  return static_cast<int>(strings_.back().size());
}

int Channel::min_length() const {
  if (empty()) throw std::logic_error("min_length() of empty channel");
  return static_cast<int>(strings_.front().size());
}

bool Channel::contains(const LieString& u) const {
  return std::binary_search(strings_.begin(), strings_.end(), u,
                            lie_string_less);
}

bool Channel::contains_epsilon() const {
  return !strings_.empty() && strings_.front().empty();
}

std::string Channel::key() const {
  std::ostringstream os;
  os << "t" << t_ << ":";
  for (const LieString& u : strings_) os << lie_string_str(u) << ";";
  return os.str();
}

Channel suffix_channel(const Channel& c, const LieString& u) {
  for (const Lie& l : u) {
    if (l.truth >= c.t() || l.reply >= c.t())
      throw std::invalid_argument("suffix_channel: alphabet mismatch");
  }
  std::vector<LieString> out;
  for (const LieString& s : c.strings()) {
    if (s.size() < u.size()) continue;
    if (std::equal(u.begin(), u.end(), s.begin()))
      out.emplace_back(s.begin() + u.size(), s.end());
  }
  return Channel(c.t(), std::move(out));
}

std::vector<Channel> suffix_family(const Channel& c) {
  std::set<std::string> seen;
  std::vector<Channel> out;
  // BFS over prefixes; prefixes longer than o(C) all give the empty channel.
  std::vector<LieString> frontier{LieString{}};
  while (!frontier.empty()) {
    std::vector<LieString> next;
    for (const LieString& u : frontier) {
      Channel s = suffix_channel(c, u);
      if (s.empty()) continue;
      if (seen.insert(s.key()).second) out.push_back(s);
      for (int a = 0; a < c.t(); ++a)
        for (int b = 0; b < c.t(); ++b)
          if (a != b) {
            LieString v = u;
            v.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
            next.push_back(std::move(v));
          }
    }
    frontier = std::move(next);
  }
  out.push_back(Channel::empty_channel(c.t()));
  return out;
}

ChannelStats stats(const Channel& c) {
  ChannelStats st;
  int k = c.empty() ? 0 : c.order();
  st.e.assign(k + 1, 0);
  for (const LieString& u : c.strings()) st.e[u.size()] += 1;
  st.p.assign(k + 1, std::vector<long long>(k + 1, 0));
  // enumerate prefixes u with |u| <= k
  std::vector<LieString> frontier{LieString{}};
  for (int j = 0; j <= k; ++j) {
    std::vector<LieString> next;
    for (const LieString& u : frontier) {
      Channel s = suffix_channel(c, u);
      if (!s.empty()) {
        st.p[s.order()][j] += 1;
        for (int a = 0; a < c.t(); ++a)
          for (int b = 0; b < c.t(); ++b)
            if (a != b) {
              LieString v = u;
              v.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
              next.push_back(std::move(v));
            }
      }
    }
    frontier = std::move(next);
  }
  st.p_totals.assign(k + 1, 0);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) st.p_totals[i] += st.p[i][j];
  return st;
}

bool is_nondegenerate(const Channel& c, Variant variant) {
  if (c.contains_epsilon()) return true;
  for (int letter = 0; letter < c.t(); ++letter) {
    bool found = false;
    for (const LieString& u : c.strings()) {
      if (u.empty()) continue;
      bool all = true;
      for (const Lie& l : u) {
        int side = (variant == Variant::original) ? l.truth : l.reply;
        if (side != letter) {
          all = false;
          break;
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Channel permute_letters(const Channel& c, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(c.t()))
    throw std::invalid_argument("permute_letters: bad permutation size");
  std::vector<LieString> out;
  out.reserve(c.size());
  for (const LieString& u : c.strings()) {
    LieString v;
    v.reserve(u.size());
    for (const Lie& l : u)
      v.push_back(Lie{std::uint8_t(perm[l.truth]), std::uint8_t(perm[l.reply])});
    out.push_back(std::move(v));
  }
  return Channel(c.t(), std::move(out));
}

SuffixFamily::SuffixFamily(Channel c) : t_(c.t()) {
  k_ = c.empty() ? 0 : c.order();
  states_.push_back(std::move(c));
  index_[states_[0].key()] = 0;
  // close under single-lie steps
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (int a = 0; a < t_; ++a) {
      for (int b = 0; b < t_; ++b) {
        if (a == b) continue;
        Channel s = suffix_channel(states_[i], {Lie{std::uint8_t(a), std::uint8_t(b)}});
        std::string key = s.key();
        if (!index_.count(key)) {
          index_[key] = static_cast<int>(states_.size());
          states_.push_back(std::move(s));
        }
      }
    }
  }
  // ensure the empty channel is present even if unreachable (e.g. C = L(t)^*<=k
  // reaches it only beyond depth k, which the closure above always covers;
  // C = {e} reaches it in one step)
  {
    Channel e = Channel::empty_channel(t_);
    if (!index_.count(e.key())) {
      index_[e.key()] = static_cast<int>(states_.size());
      states_.push_back(std::move(e));
    }
  }
  empty_id_ = index_.at(Channel::empty_channel(t_).key());

  const int n = size();
  has_epsilon_.resize(n);
  orders_.resize(n);
  min_len_.resize(n);
  delta_.assign(n, std::vector<int>(t_ * t_, empty_id_));
  for (int id = 0; id < n; ++id) {
    has_epsilon_[id] = states_[id].contains_epsilon();
    orders_[id] = states_[id].empty() ? -1 : states_[id].order();
    min_len_[id] = states_[id].empty() ? (1 << 20) : states_[id].min_length();
    for (int a = 0; a < t_; ++a)
      for (int b = 0; b < t_; ++b)
        if (a != b) {
          Channel s = suffix_channel(states_[id], {Lie{std::uint8_t(a), std::uint8_t(b)}});
          delta_[id][a * t_ + b] = index_.at(s.key());
        }
  }
}

int SuffixFamily::state_order(int id) const {
  if (id == empty_id_) throw std::logic_error("order of empty suffix channel");
  return orders_.at(id);
}

int SuffixFamily::min_length(int id) const {
  if (id == empty_id_) throw std::logic_error("min_length of empty suffix channel");
  return min_len_.at(id);
}

int SuffixFamily::step(int id, Lie lie) const {
  if (lie.truth >= t_ || lie.reply >= t_ || lie.truth == lie.reply)
    throw std::invalid_argument("SuffixFamily::step: bad lie");
  return delta_.at(id)[lie.truth * t_ + lie.reply];
}

int SuffixFamily::walk(int id, const LieString& u) const {
  int cur = id;
  for (const Lie& l : u) cur = step(cur, l);
  return cur;
}

std::optional<int> SuffixFamily::id_of(const Channel& ch) const {
  auto it = index_.find(ch.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ulam
