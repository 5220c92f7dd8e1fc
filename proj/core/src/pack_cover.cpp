#include "ulam/pack_cover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ulam {

std::uint64_t WordMask::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

bool WordMask::intersects(const WordMask& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & other.bits_[i]) return true;
  return false;
}

void WordMask::or_with(const WordMask& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
}

void WordMask::andnot_with(const WordMask& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
}

bool WordMask::none() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

std::uint64_t WordMask::first_unset() const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t inv = ~bits_[i];
    if (i == bits_.size() - 1 && n_ % 64 != 0)
      inv &= (1ULL << (n_ % 64)) - 1;  // ignore bits past n_
    if (inv) {
      std::uint64_t idx = (std::uint64_t(i) << 6) + std::countr_zero(inv);
      return idx < n_ ? idx : n_;
    }
  }
  return n_;
}

std::vector<WordMask> shadow_table(const Channel& c, int q) {
  std::uint64_t total = upow64(c.t(), q);
  std::vector<WordMask> table(total, WordMask(total));
  for (std::uint64_t i = 0; i < total; ++i) {
    Word w = Word::from_index(i, q, c.t());
    for (const Word& wp : shadow(w, c)) table[i].set(wp.index(c.t()));
  }
  return table;
}

bool verify_placement(const PlacementProblem& p, const Placement& pl) {
  std::uint64_t total = upow64(p.t, p.q);
  WordMask seen(total);
  for (const auto& [stem, cls] : pl.stems) {
    if (stem.length() != p.q) return false;
    WordMask mask(total);
    for (const Word& wp : shadow(stem, p.demand.at(cls).first))
      mask.set(wp.index(p.t));
    if (p.mode == PlacementMode::packing && seen.intersects(mask)) return false;
    seen.or_with(mask);
  }
  if (p.mode == PlacementMode::covering) return seen.all();
  return true;
}

namespace {

struct SearchContext {
  const PlacementProblem& p;
  std::uint64_t total = 0;
  std::vector<std::vector<WordMask>> shadows;   // per class, per stem
  std::vector<std::vector<std::vector<std::uint32_t>>> covers;
  // covers[cls][word] = stems whose shadow contains word (lex order)
  std::vector<std::uint64_t> min_size, max_size;
  std::uint64_t nodes = 0, max_nodes = 0;

  void tick() {
    if (++nodes > max_nodes) throw CapExceeded("find_placement: node budget exceeded");
  }
};

// letter permutations fixing every demand class (identity excluded)
std::vector<std::vector<int>> valid_symmetries(const PlacementProblem& p) {
  std::vector<int> perm(p.t);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool ok = true;
    for (const auto& [ch, cnt] : p.demand) {
      (void)cnt;
      if (!(permute_letters(ch, perm) == ch)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  }
  return out;
}

std::uint64_t permute_word_index(std::uint64_t idx, int q, int t,
                                 const std::vector<int>& perm) {
  Word w = Word::from_index(idx, q, t);
  Word v = w;
  for (int i = 0; i < q; ++i) v.set(i, perm[w[i]]);
  return v.index(t);
}

struct PackingSearch {
  SearchContext& ctx;
  std::vector<int> item_class;  // demand-class index per item, search order
  std::vector<std::uint64_t> placed;
  std::vector<std::uint64_t> min_tail;  // sum of min_size for items i..end
  WordMask used;
  std::vector<bool> first_stem_allowed;

  bool run(std::size_t i) {
    ctx.tick();
    if (i == item_class.size()) return true;
    std::uint64_t free = ctx.total - used.count();
    if (min_tail[i] > free) return false;
    int cls = item_class[i];
    std::uint64_t start = 0;
    if (i > 0 && item_class[i - 1] == cls) start = placed[i - 1];  // symmetric items
    for (std::uint64_t stem = start; stem < ctx.total; ++stem) {
      if (i == 0 && !first_stem_allowed[stem]) continue;
      const WordMask& mask = ctx.shadows[cls][stem];
      if (mask.intersects(used)) continue;
      used.or_with(mask);
      placed[i] = stem;
      if (run(i + 1)) return true;
      used.andnot_with(mask);
    }
    return false;
  }
};

struct CoveringSearch {
  SearchContext& ctx;
  std::vector<long long> remaining;  // per demand class
  std::uint64_t remaining_capacity = 0;
  WordMask covered;
  std::vector<std::pair<std::uint64_t, int>> placed;  // (stem, class)

  bool run() {
    ctx.tick();
    std::uint64_t w0 = covered.first_unset();
    if (w0 == ctx.total) return true;  // leftovers go anywhere
    std::uint64_t uncovered = ctx.total - covered.count();
    if (remaining_capacity < uncovered) return false;
    for (int cls = 0; cls < int(remaining.size()); ++cls) {
      if (remaining[cls] == 0) continue;
      remaining[cls] -= 1;
      remaining_capacity -= ctx.max_size[cls];
      for (std::uint32_t stem : ctx.covers[cls][w0]) {
        WordMask before = covered;
        covered.or_with(ctx.shadows[cls][stem]);
        placed.emplace_back(stem, cls);
        if (run()) return true;
        placed.pop_back();
        covered = before;
      }
      remaining[cls] += 1;
      remaining_capacity += ctx.max_size[cls];
    }
    return false;
  }
};

}  // namespace

std::optional<Placement> find_placement(const PlacementProblem& p,
                                        const PackSearchOptions& opts) {
  std::uint64_t total = upow64(p.t, p.q);
  if (total > opts.max_words)
    throw CapExceeded("find_placement: t^Q exceeds enumeration cap");

  SearchContext ctx{p};
  ctx.total = total;
  ctx.max_nodes = opts.max_nodes;
  const int ncls = int(p.demand.size());
  ctx.shadows.resize(ncls);
  ctx.min_size.assign(ncls, 0);
  ctx.max_size.assign(ncls, 0);
  for (int c = 0; c < ncls; ++c) {
    ctx.shadows[c] = shadow_table(p.demand[c].first, p.q);
    std::uint64_t mn = ~0ULL, mx = 0;
    for (const WordMask& m : ctx.shadows[c]) {
      std::uint64_t s = m.count();
      mn = std::min(mn, s);
      mx = std::max(mx, s);
    }
    ctx.min_size[c] = mn;
    ctx.max_size[c] = mx;
  }

  if (p.mode == PlacementMode::packing) {
    // order items largest-max-shadow first; stable on class index
    std::vector<int> class_order(ncls);
    std::iota(class_order.begin(), class_order.end(), 0);
    std::sort(class_order.begin(), class_order.end(), [&](int a, int b) {
      if (ctx.max_size[a] != ctx.max_size[b]) return ctx.max_size[a] > ctx.max_size[b];
      return a < b;
    });
    PackingSearch search{ctx};
    for (int c : class_order)
      for (long long i = 0; i < p.demand[c].second; ++i)
        search.item_class.push_back(c);
    search.placed.assign(search.item_class.size(), 0);
    search.min_tail.assign(search.item_class.size() + 1, 0);
    for (int i = int(search.item_class.size()) - 1; i >= 0; --i)
      search.min_tail[i] = search.min_tail[i + 1] + ctx.min_size[search.item_class[i]];
    search.used = WordMask(total);
    search.first_stem_allowed.assign(total, true);
    if (opts.symmetry_reduction && !search.item_class.empty()) {
      for (const auto& perm : valid_symmetries(p)) {
        for (std::uint64_t w = 0; w < total; ++w)
          if (permute_word_index(w, p.q, p.t, perm) < w)
            search.first_stem_allowed[w] = false;
      }
    }
    if (!search.run(0)) return std::nullopt;
    Placement out;
    for (std::size_t i = 0; i < search.item_class.size(); ++i)
      out.stems.emplace_back(Word::from_index(search.placed[i], p.q, p.t),
                             search.item_class[i]);
    return out;
  }

  // covering
  CoveringSearch search{ctx};
  search.remaining.resize(ncls);
  for (int c = 0; c < ncls; ++c) {
    search.remaining[c] = p.demand[c].second;
    search.remaining_capacity += std::uint64_t(p.demand[c].second) * ctx.max_size[c];
  }
  ctx.covers.resize(ncls);
  for (int c = 0; c < ncls; ++c) {
    ctx.covers[c].resize(total);
    for (std::uint64_t stem = 0; stem < total; ++stem)
      for (std::uint64_t w = 0; w < total; ++w)
        if (ctx.shadows[c][stem].test(w)) ctx.covers[c][w].push_back(std::uint32_t(stem));
  }
  search.covered = WordMask(total);
  if (!search.run()) return std::nullopt;
  Placement out;
  for (auto [stem, cls] : search.placed)
    out.stems.emplace_back(Word::from_index(stem, p.q, p.t), cls);
  // park unplaced demand at stem 0 (adds coverage, never removes it)
  for (int c = 0; c < ncls; ++c)
    for (long long i = 0; i < search.remaining[c]; ++i)
      out.stems.emplace_back(Word::from_index(0, p.q, p.t), c);
  return out;
}

OneBatchStrategy strategy_from_placement(const PlacementProblem& p,
                                         const Placement& pl) {
  OneBatchStrategy s;
  s.q = p.q;
  s.t = p.t;
  for (const auto& [stem, cls] : pl.stems)
    s.assignment.emplace_back(stem, p.demand.at(cls).first);
  return s;
}

std::pair<PlacementProblem, Placement> placement_from_strategy(
    const OneBatchStrategy& s, PlacementMode mode) {
  PlacementProblem p;
  p.q = s.q;
  p.t = s.t;
  p.mode = mode;
  Placement pl;
  for (const auto& [word, ch] : s.assignment) {
    int cls = -1;
    for (int i = 0; i < int(p.demand.size()); ++i)
      if (p.demand[i].first == ch) {
        cls = i;
        break;
      }
    if (cls < 0) {
      p.demand.emplace_back(ch, 0);
      cls = int(p.demand.size()) - 1;
    }
    p.demand[cls].second += 1;
    pl.stems.emplace_back(word, cls);
  }
  return {p, pl};
}

std::vector<std::vector<std::vector<int>>> questions_of(const OneBatchStrategy& s) {
  std::vector<std::vector<std::vector<int>>> qs(
      s.q, std::vector<std::vector<int>>(s.t));
  for (int e = 0; e < int(s.assignment.size()); ++e)
    for (int round = 0; round < s.q; ++round)
      qs[round][s.assignment[e].first[round]].push_back(e);
  return qs;
}

}  // namespace ulam
