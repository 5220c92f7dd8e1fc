#include "ulam/game.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ulam {

long long StateVector::total() const {
  long long s = 0;
  for (const auto& [id, c] : counts) s += c;
  return s;
}

StateVector normalize(const SuffixFamily& fam, StateVector s) {
  for (auto it = s.counts.begin(); it != s.counts.end();) {
    int id = it->first;
    bool dead = fam.is_empty(id) || fam.min_length(id) > s.rounds_left;
    if (dead || it->second == 0)
      it = s.counts.erase(it);
    else
      ++it;
  }
  return s;
}

StateVector init_state(const SuffixFamily& fam, long long n, int q) {
  if (n < 0 || q < 0) throw std::invalid_argument("init_state: n, q >= 0");
  StateVector s;
  s.rounds_left = q;
  if (n > 0) s.counts[fam.root_id()] = n;
  return normalize(fam, std::move(s));
}

StateVector apply_round(const SuffixFamily& fam, const StateVector& s,
                        const Question& question, int answer) {
  if (s.rounds_left <= 0) throw std::logic_error("apply_round: no rounds left");
  if (answer < 0 || answer >= fam.t())
    throw std::invalid_argument("apply_round: answer out of alphabet");
  const int t = fam.t();
  StateVector out;
  out.rounds_left = s.rounds_left - 1;
  for (const auto& [id, count] : s.counts) {
    auto it = question.split.find(id);
    if (it == question.split.end())
      throw std::invalid_argument("apply_round: question misses a class");
    const std::vector<long long>& parts = it->second;
    if (int(parts.size()) != t ||
        std::accumulate(parts.begin(), parts.end(), 0LL) != count)
      throw std::invalid_argument("apply_round: malformed composition");
    for (int part = 0; part < t; ++part) {
      if (parts[part] == 0) continue;
      int nid = (part == answer)
                    ? id
                    : fam.step(id, Lie{std::uint8_t(part), std::uint8_t(answer)});
      out.counts[nid] += parts[part];
    }
  }
  return normalize(fam, std::move(out));
}

bool paul_wins_terminal(const SuffixFamily& fam, const StateVector& s,
                        Variant variant) {
  if (s.rounds_left != 0)
    throw std::logic_error("paul_wins_terminal: game not over");
  long long survivors = 0;
  for (const auto& [id, count] : s.counts)
    if (fam.has_epsilon(id)) survivors += count;
  return variant == Variant::original ? survivors <= 1 : survivors >= 1;
}

CoarseState coarsen(const SuffixFamily& fam, const StateVector& s) {
  const int k = fam.order();
  CoarseState cs;
  cs.x.assign(k + 1, 0);
  for (const auto& [id, count] : s.counts) {
    int i = k - fam.state_order(id);
    cs.x.at(i) += count;
  }
  return cs;
}

namespace {

// all t-part compositions of n, near-even splits first
std::vector<std::vector<long long>> compositions(long long n, int t) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(t, 0);
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (i == t - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  std::stable_sort(out.begin(), out.end(),
                   [n, t](const std::vector<long long>& a,
                          const std::vector<long long>& b) {
                     auto spread = [n, t](const std::vector<long long>& v) {
                       long long s = 0;
                       for (long long x : v) s += std::abs(x * t - n);
                       return s;
                     };
                     return spread(a) < spread(b);
                   });
  return out;
}

}  // namespace

AdaptiveSolver::AdaptiveSolver(const Channel& c, Variant variant, SolveOptions opts)
    : fam_(c), variant_(variant), opts_(opts) {}

SolveResult AdaptiveSolver::solve(long long n, int q) {
  return solve_from(init_state(fam_, n, q));
}

SolveResult AdaptiveSolver::solve_from(const StateVector& s) {
  SolveResult r;
  std::uint64_t before = nodes_;
  r.paul_wins = paul_wins(normalize(fam_, s));
  r.nodes = nodes_ - before;
  return r;
}

bool AdaptiveSolver::paul_wins(const StateVector& s) {
  if (++nodes_ > opts_.max_nodes)
    throw CapExceeded("solve_adaptive: node budget exceeded");

  // quick terminal facts
  if (variant_ == Variant::original && s.total() <= 1) return true;
  if (variant_ == Variant::pathological && s.total() == 0) return false;
  if (s.rounds_left == 0) return paul_wins_terminal(fam_, s, variant_);

  std::pair<std::vector<long long>, int> key;
  if (opts_.memoize) {
    key.first.assign(fam_.size(), 0);
    for (const auto& [id, c] : s.counts) key.first[id] = c;
    key.second = s.rounds_left;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // Paul: exists a question such that for all answers he wins
  std::vector<int> ids;
  std::vector<std::vector<std::vector<long long>>> options;
  for (const auto& [id, count] : s.counts) {
    ids.push_back(id);
    options.push_back(compositions(count, fam_.t()));
  }
  bool win = false;
  std::vector<std::size_t> pick(ids.size(), 0);
  while (true) {
    Question question;
    for (std::size_t i = 0; i < ids.size(); ++i)
      question.split[ids[i]] = options[i][pick[i]];
    bool all_answers = true;
    for (int answer = 0; answer < fam_.t(); ++answer) {
      if (!paul_wins(apply_round(fam_, s, question, answer))) {
        all_answers = false;
        break;
      }
    }
    if (all_answers) {
      win = true;
      break;
    }
    // next question
    std::size_t i = 0;
    while (i < ids.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == ids.size()) break;
  }

  if (opts_.memoize) memo_[key] = win;
  return win;
}

SolveResult solve_adaptive(const Channel& c, long long n, int q, Variant variant,
                           const SolveOptions& opts) {
  AdaptiveSolver solver(c, variant, opts);
  SolveResult r = solver.solve(n, q);
  if (r.paul_wins && opts.tree_node_budget > 0) {
    // rebuild a winning tree by replaying the solve against the warm memo
    std::uint64_t budget = opts.tree_node_budget;
    bool aborted = false;
    std::function<std::unique_ptr<StrategyTree>(const StateVector&)> build =
        [&](const StateVector& s) -> std::unique_ptr<StrategyTree> {
      if (s.rounds_left == 0 || s.total() == 0)
        return std::make_unique<StrategyTree>();  // leaf
      if (budget == 0) {
        aborted = true;
        return nullptr;
      }
      std::vector<int> ids;
      std::vector<std::vector<std::vector<long long>>> options;
      for (const auto& [id, count] : s.counts) {
        ids.push_back(id);
        options.push_back(compositions(count, c.t()));
      }
      std::vector<std::size_t> pick(ids.size(), 0);
      while (!aborted) {
        Question question;
        for (std::size_t i = 0; i < ids.size(); ++i)
          question.split[ids[i]] = options[i][pick[i]];
        bool ok = true;
        for (int answer = 0; answer < c.t(); ++answer)
          if (!solver.solve_from(apply_round(solver.family(), s, question, answer))
                   .paul_wins) {
            ok = false;
            break;
          }
        if (ok) {
          auto node = std::make_unique<StrategyTree>();
          node->question = question;
          budget -= 1;
          for (int answer = 0; answer < c.t(); ++answer) {
            auto child = build(apply_round(solver.family(), s, question, answer));
            if (!child) return nullptr;
            node->children.push_back(std::move(child));
          }
          return node;
        }
        std::size_t i = 0;
        while (i < ids.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == ids.size()) break;
      }
      return nullptr;
    };
    StateVector s0 = init_state(solver.family(), n, q);
    r.tree = build(s0);
    if (aborted) r.tree.reset();
  }
  return r;
}

MaxnResult optimal_n_adaptive(const Channel& c, int q, Variant variant,
                              long long n_cap, const SolveOptions& opts) {
  AdaptiveSolver solver(c, variant, opts);
  auto wins = [&](long long n) { return solver.solve(n, q).paul_wins; };
  MaxnResult out;
  if (variant == Variant::original) {
    // largest winning n; monotone: win at n => win at n-1
    if (!wins(0)) return out;  // cannot happen (vacuous win), kept for shape
    if (wins(n_cap)) {
      out.value = n_cap;
      out.capped = true;
      return out;
    }
    long long lo = 0, hi = n_cap;  // wins(lo), !wins(hi)
    while (hi - lo > 1) {
      long long mid = lo + (hi - lo) / 2;
      (wins(mid) ? lo : hi) = mid;
    }
    out.value = lo;
  } else {
    // smallest winning n; monotone: win at n => win at n+1
    if (!wins(n_cap)) return out;
    long long lo = 0, hi = n_cap;  // !wins(lo) unless lo wins immediately
    if (wins(0)) {
      out.value = 0;
      return out;
    }
    while (hi - lo > 1) {
      long long mid = lo + (hi - lo) / 2;
      (wins(mid) ? hi : lo) = mid;
    }
    out.value = hi;
  }
  return out;
}

namespace {

// state vector induced by a first-batch assignment and response w'
StateVector induced_state(const SuffixFamily& fam,
                          const std::vector<std::pair<Word, long long>>& words,
                          const Word& response, int q2) {
  StateVector s;
  s.rounds_left = q2;
  for (const auto& [w, count] : words) {
    LieString u = mismatch_string(w, response);
    int id = fam.walk(fam.root_id(), u);
    s.counts[id] += count;
  }
  return normalize(fam, std::move(s));
}

}  // namespace

TwoBatchResult solve_two_batch(const Channel& c, long long n, int q1, int q2,
                               Variant variant, const TwoBatchOptions& opts) {
  std::uint64_t nwords = upow64(c.t(), q1);
  if (nwords > opts.max_words)
    throw CapExceeded("solve_two_batch: t^q1 exceeds enumeration cap");
  SuffixFamily fam(c);
  TwoBatchResult result;

  // demand -> packing/covering existence, memoized across assignments
  std::map<std::vector<long long>, bool> feasible_cache;
  auto second_batch_ok = [&](const StateVector& s) {
    if (q2 == 0) return paul_wins_terminal(fam, s, variant);
    std::vector<long long> key(fam.size(), 0);
    for (const auto& [id, cnt] : s.counts) key[id] = cnt;
    auto it = feasible_cache.find(key);
    if (it != feasible_cache.end()) return it->second;
    PlacementProblem p;
    p.q = q2;
    p.t = c.t();
    p.mode = variant == Variant::original ? PlacementMode::packing
                                          : PlacementMode::covering;
    for (const auto& [id, cnt] : s.counts) p.demand.emplace_back(fam.channel(id), cnt);
    bool ok = find_placement(p, opts.pack).has_value();
    feasible_cache[key] = ok;
    return ok;
  };

  // multiset assignments: nondecreasing word indices per element
  std::vector<std::uint64_t> assign(std::size_t(n), 0);
  std::vector<Word> all_words;
  for (std::uint64_t i = 0; i < nwords; ++i)
    all_words.push_back(Word::from_index(i, q1, c.t()));

  std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t e,
                                                            std::uint64_t from) {
    if (e == assign.size()) {
      result.assignments_tried += 1;
      if (result.assignments_tried > opts.max_assignments)
        throw CapExceeded("solve_two_batch: assignment cap exceeded");
      std::vector<std::pair<Word, long long>> words;
      for (std::size_t i = 0; i < assign.size();) {
        std::size_t j = i;
        while (j < assign.size() && assign[j] == assign[i]) ++j;
        words.emplace_back(all_words[assign[i]], static_cast<long long>(j - i));
        i = j;
      }
      for (std::uint64_t r = 0; r < nwords; ++r) {
        StateVector s = induced_state(fam, words, all_words[r], q2);
        if (!second_batch_ok(s)) return false;
      }
      for (std::size_t i = 0; i < assign.size(); ++i)
        result.first_batch.push_back(all_words[assign[i]]);
      return true;
    }
    for (std::uint64_t w = from; w < nwords; ++w) {
      assign[e] = w;
      if (rec(e + 1, w)) return true;
    }
    return false;
  };

  result.paul_wins = rec(0, 0);
  return result;
}

}  // namespace ulam
