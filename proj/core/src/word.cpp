#include "ulam/word.hpp"

#include "ulam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ulam {

Word::Word(std::initializer_list<int> digits) : len_(0) {
  digits_.fill(0);
  for (int d : digits) push_back(d);
}

Word Word::from_index(std::uint64_t index, int len, int t) {
  if (len > kMaxLen) throw std::invalid_argument("Word: length too large");
  Word w;
  w.len_ = std::int8_t(len);
  for (int i = len - 1; i >= 0; --i) {
    w.digits_[i] = std::uint8_t(index % t);
    index /= t;
  }
  if (index != 0) throw std::invalid_argument("Word::from_index: index out of range");
  return w;
}

Word Word::from_string(std::string_view s) {
  Word w;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("Word::from_string: bad digit");
    w.push_back(ch - '0');
  }
  return w;
}

std::uint64_t Word::index(int t) const {
  std::uint64_t r = 0;
  for (int i = 0; i < len_; ++i) r = r * t + digits_[i];
  return r;
}

void Word::push_back(int v) {
  if (len_ >= kMaxLen) throw std::length_error("Word capacity exceeded");
  digits_[len_++] = std::uint8_t(v);
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  for (int i = 0; i < other.length(); ++i) w.push_back(other[i]);
  return w;
}

Word Word::prefix(int len) const {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(digits_[i]);
  return w;
}

Word Word::suffix_from(int pos) const {
  Word w;
  for (int i = pos; i < len_; ++i) w.push_back(digits_[i]);
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(len_);
  for (int i = 0; i < len_; ++i) s.push_back(char('0' + digits_[i]));
  return s;
}

bool operator<(const Word& x, const Word& y) {
  if (x.len_ != y.len_) return x.len_ < y.len_;
  for (int i = 0; i < x.len_; ++i)
    if (x.digits_[i] != y.digits_[i]) return x.digits_[i] < y.digits_[i];
  return false;
}

std::vector<int> sections(int q, int m) {
  if (m < 1 || m > q) throw std::invalid_argument("sections: need 1 <= M <= Q");
  int hi = (q + m - 1) / m, lo = q / m, nhi = q % m;
  std::vector<int> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(i < nhi ? hi : lo);
  return out;
}

double r_tolerance(int q, int m, int t, double i) {
  if (q < 1 || m < 1) throw std::invalid_argument("r_tolerance: Q,M >= 1");
  double s = std::ceil(double(q) / m);
  return std::sqrt(s * (std::log(double(m) * t) + i * std::log(2.0)) / 2.0);
}

Interval r_tolerance_enclosure(int q, int m, int t, const Rat& i, int prec) {
  long s = (q + m - 1) / m;
  Interval ln_mt = ln_enclosure(Rat(long(m) * t), prec);
  Interval ln2 = ln_enclosure(Rat(2), prec);
  Interval inner = Interval(Rat(s, 2)) * (ln_mt + Interval(i) * ln2);
  return sqrt_enclosure(inner, prec);
}

bool is_balanced(const Word& w, const BalanceSpec& spec) {
  if (w.length() != spec.q)
    throw std::invalid_argument("is_balanced: length mismatch");
  std::vector<int> secs = sections(spec.q, spec.m);
  double threshold = double((spec.q + spec.m - 1) / spec.m) / spec.t + spec.r;
  int pos = 0;
  std::array<int, 10> cnt{};
  for (int len : secs) {
    cnt.fill(0);
    for (int i = 0; i < len; ++i) cnt[w[pos + i]] += 1;
    pos += len;
    for (int a = 0; a < spec.t; ++a)
      if (cnt[a] > threshold) return false;
  }
  return true;
}

std::uint64_t count_unbalanced(const BalanceSpec& spec, std::uint64_t cap) {
  std::uint64_t total = upow64(spec.t, spec.q);
  if (total > cap) throw CapExceeded("count_unbalanced: enumeration cap exceeded");
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < total; ++i)
    if (!is_balanced(Word::from_index(i, spec.q, spec.t), spec)) ++bad;
  return bad;
}

std::uint64_t count_balanced(const BalanceSpec& spec, std::uint64_t cap) {
  std::uint64_t total = upow64(spec.t, spec.q);
  return total - count_unbalanced(spec, cap);
}

std::vector<Word> apply_lie_string(const Word& w, const LieString& u) {
  std::vector<Word> out;
  const int q = w.length(), j = int(u.size());
  if (j > q) return out;
  // choose increasing positions; depth l places lie u[l] at position >= pos
  std::vector<int> chosen(j);
  std::function<void(int, int)> rec = [&](int l, int pos) {
    if (l == j) {
      Word wp = w;
      for (int idx = 0; idx < j; ++idx) wp.set(chosen[idx], u[idx].reply);
      out.push_back(wp);
      return;
    }
    for (int i = pos; i <= q - (j - l); ++i) {
      if (w[i] == u[l].truth) {
        chosen[l] = i;
        rec(l + 1, i + 1);
      }
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LieString reverse_swap(const LieString& u) {
  LieString v;
  v.reserve(u.size());
  for (const Lie& l : u) v.push_back(Lie{l.reply, l.truth});
  return v;
}

std::vector<Word> preimage_lie_string(const Word& wp, const LieString& u) {
  return apply_lie_string(wp, reverse_swap(u));
}

LieString mismatch_string(const Word& truth, const Word& response) {
  if (truth.length() != response.length())
    throw std::invalid_argument("mismatch_string: length mismatch");
  LieString u;
  for (int i = 0; i < truth.length(); ++i)
    if (truth[i] != response[i])
      u.push_back(Lie{std::uint8_t(truth[i]), std::uint8_t(response[i])});
  return u;
}

std::vector<Word> shadow(const Word& w, const Channel& c) {
  std::vector<Word> out;
  for (const LieString& u : c.strings()) {
    std::vector<Word> part = apply_lie_string(w, u);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t shadow_size(const Word& w, const Channel& c) {
  return shadow(w, c).size();
}

unsigned long long ball_size(int q, int t, int j) {
  if (j < 0 || j > q) throw std::invalid_argument("ball_size: need 0 <= j <= Q");
  unsigned long long sum = 0;
  for (int l = 0; l <= j; ++l) {
    Int term = binom(q, l) * ipow(Int(t - 1), l);
    if (!term.fits_ulong_p()) throw std::overflow_error("ball_size overflow");
    sum += term.get_ui();
  }
  return sum;
}

double g_bound(int q, int m, double r, int j, int k, int t) {
  if (j < 0) throw std::invalid_argument("g_bound: j >= 0");
  double s = double((q + m - 1) / m);
  return binom(m + j - 1, j).get_d() * std::pow(s / t + r + k, j);
}

double h_bound(int q, int m, double r, int j, int k, int t) {
  if (j < 0) throw std::invalid_argument("h_bound: j >= 0");
  double s = double((q + m - 1) / m);
  double inner = std::max(0.0, s / t - (t - 1) * r - 2 - k);
  return binom(m, j).get_d() * std::pow(inner, j);
}

Interval g_bound_enclosure(int q, int m, const Interval& r, int j, int k, int t) {
  long s = (q + m - 1) / m;
  Interval base = Interval(Rat(s, t)) + r + Interval(Rat(k));
  return Interval(Rat(binom(m + j - 1, j))) * pow_nonneg(base, unsigned(j));
}

Interval h_bound_enclosure(int q, int m, const Interval& r, int j, int k, int t) {
  long s = (q + m - 1) / m;
  Interval base = Interval(Rat(s, t)) - Interval(Rat(t - 1)) * r -
                  Interval(Rat(2 + k));
  return Interval(Rat(binom(m, j))) * pow_nonneg(clamp_min(base, Rat(0)), unsigned(j));
}

int hamming_distance(const Word& x, const Word& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (int i = 0; i < x.length(); ++i) d += (x[i] != y[i]);
  return d;
}

namespace {

// enumerate all words at Hamming distance exactly d from w; returns true
// if the visitor found what it wanted
bool visit_at_distance(const Word& w, int t, int d,
                       const std::function<bool(const Word&)>& fn) {
  const int q = w.length();
  std::vector<int> pos(d);
  std::function<bool(int, int)> pick = [&](int l, int start) -> bool {
    if (l == d) {
      // assign non-equal letters to the chosen positions
      Word cur = w;
      std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == d) return fn(cur);
        for (int v = 0; v < t; ++v) {
          if (v == w[pos[i]]) continue;
          cur.set(pos[i], v);
          if (assign(i + 1)) return true;
        }
        cur.set(pos[i], w[pos[i]]);
        return false;
      };
      return assign(0);
    }
    for (int i = start; i <= q - (d - l); ++i) {
      pos[l] = i;
      if (pick(l + 1, i + 1)) return true;
    }
    return false;
  };
  if (d == 0) return fn(w);
  return pick(0, 0);
}

}  // namespace

std::optional<int> distance_to_balanced(const Word& w, const BalanceSpec& spec,
                                        int cap) {
  if (cap < 0 || cap > spec.q) cap = spec.q;
  for (int d = 0; d <= cap; ++d) {
    bool found = visit_at_distance(
        w, spec.t, d, [&](const Word& x) { return is_balanced(x, spec); });
    if (found) return d;
  }
  return std::nullopt;
}

}  // namespace ulam
