#include "ulam/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ulam/channel.hpp"
#include "ulam/word.hpp"

namespace ulam {

namespace {

LieString random_lie_string(std::mt19937_64& rng, int t, int len) {
  LieString u;
  for (int i = 0; i < len; ++i) {
    int a = int(rng() % t);
    int b = int(rng() % (t - 1));
    if (b >= a) ++b;
    u.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
  }
  return u;
}

Channel random_channel(std::mt19937_64& rng, int t, int k) {
  // always include one string of length k; sprinkle shorter ones
  std::vector<LieString> strings;
  strings.push_back(random_lie_string(rng, t, k));
  for (int tries = 0; tries < 4; ++tries) {
    LieString u = random_lie_string(rng, t, int(rng() % (k + 1)));
    bool dup = false;
    for (const LieString& s : strings) dup = dup || s == u;
    if (!dup) strings.push_back(u);
  }
  return Channel(t, std::move(strings));
}

// random word within distance <= k of a balanced word
Word random_near_balanced(std::mt19937_64& rng, const BalanceSpec& spec, int k) {
  std::uint64_t total = upow64(spec.t, spec.q);
  for (int tries = 0; tries < 4096; ++tries) {
    Word w = Word::from_index(rng() % total, spec.q, spec.t);
    if (!is_balanced(w, spec)) continue;
    int flips = int(rng() % (k + 1));
    for (int i = 0; i < flips; ++i) {
      int pos = int(rng() % spec.q);
      int v = int(rng() % spec.t);
      w.set(pos, v);
    }
    return w;
  }
  throw std::runtime_error("random_near_balanced: no balanced word found");
}

}  // namespace

SelftestResult run_lemma4_suite(std::uint64_t seed, long long cases) {
  std::mt19937_64 rng(seed);
  SelftestResult out;
  std::ostringstream log;
  const int prec = 128;
  for (long long it = 0; it < cases; ++it) {
    int t = 2 + int(rng() % 2);             // {2,3}
    int k = 1 + int(rng() % 2);             // {1,2}
    int q = k + 1 + int(rng() % (12 - k));  // <= 12
    int m = 1 + int(rng() % std::min(3, q));
    int i = 1 + int(rng() % 2);
    BalanceSpec spec{m, r_tolerance(q, m, t, double(i)), t, q};
    Interval r_enc = r_tolerance_enclosure(q, m, t, Rat(i), prec);
    Word w = random_near_balanced(rng, spec, k);
    int j = int(rng() % (k + 1));
    LieString u = random_lie_string(rng, t, j);
    Channel c = random_channel(rng, t, k);

    ++out.cases;
    bool bad = false;

    long long forward = static_cast<long long>(apply_lie_string(w, u).size());
    long long backward = static_cast<long long>(preimage_lie_string(w, u).size());
    Interval g = g_bound_enclosure(q, m, r_enc, j, k, t);
    Interval h = h_bound_enclosure(q, m, r_enc, j, k, t);
    if (to_rat(forward) > g.hi || to_rat(forward) < h.lo) bad = true;
    if (to_rat(backward) > g.hi || to_rat(backward) < h.lo) bad = true;

    // shadow-sum form over the channel
    long long shadow_count = static_cast<long long>(shadow(w, c).size());
    Interval gsum(Rat(0)), hsum(Rat(0));
    for (const LieString& s : c.strings()) {
      gsum = gsum + g_bound_enclosure(q, m, r_enc, int(s.size()), k, t);
      hsum = hsum + h_bound_enclosure(q, m, r_enc, int(s.size()), k, t);
    }
    if (to_rat(shadow_count) > gsum.hi || to_rat(shadow_count) < hsum.lo) bad = true;

    // adjointness on a random image
    std::vector<Word> forward_words = apply_lie_string(w, u);
    if (!forward_words.empty()) {
      const Word& wp = forward_words[rng() % forward_words.size()];
      std::vector<Word> back = preimage_lie_string(wp, u);
      if (std::find(back.begin(), back.end(), w) == back.end()) bad = true;
    }

    if (bad) {
      ++out.failures;
      if (out.failures <= 5)
        log << "case " << it << ": q=" << q << " m=" << m << " t=" << t
            << " k=" << k << " w=" << w.str() << " u=" << lie_string_str(u)
            << " C=" << c.key() << "\n";
    }
  }
  out.log = log.str();
  return out;
}

SelftestResult run_suffix_suite(std::uint64_t seed, long long cases) {
  std::mt19937_64 rng(seed);
  SelftestResult out;
  std::ostringstream log;
  for (long long it = 0; it < cases; ++it) {
    int t = 2 + int(rng() % 2);
    int k = 1 + int(rng() % 2);
    Channel c = random_channel(rng, t, k);
    LieString u = random_lie_string(rng, t, int(rng() % (k + 1)));
    LieString v = random_lie_string(rng, t, int(rng() % (k + 1)));
    ++out.cases;
    LieString uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Channel lhs = suffix_channel(suffix_channel(c, u), v);
    Channel rhs = suffix_channel(c, uv);
    if (!(lhs == rhs)) {
      ++out.failures;
      if (out.failures <= 5)
        log << "case " << it << ": C=" << c.key() << " u=" << lie_string_str(u)
            << " v=" << lie_string_str(v) << "\n";
    }
  }
  out.log = log.str();
  return out;
}

}  // namespace ulam
