#include "ulam/synth.hpp"

#include <algorithm>
#include <cmath>

#include "ulam/adversary.hpp"

namespace ulam {

SynthParams SynthParams::defaults(const Channel& c, int q1, int q2,
                                  long long alpha, long long alpha_prime) {
  if (c.empty()) throw std::invalid_argument("SynthParams: empty channel");
  SynthParams p;
  p.q1 = q1;
  p.q2 = q2;
  p.m1 = std::max(1, int(std::ceil(std::cbrt(double(q1)))));
  p.m2 = std::max(1, int(std::ceil(std::cbrt(double(q2)))));
  p.eta1 = p.eta2 = Rat(c.order() + 1);
  p.alpha = alpha;
  p.alpha_prime = alpha_prime;
  return p;
}

double SynthParams::r1(int t) const {
  return r_tolerance(q1, m1, t, eta1.get_d() * std::log2(double(q())));
}

double SynthParams::r2(int t) const {
  return r_tolerance(q2, m2, t, eta2.get_d() * std::log2(double(q())));
}

namespace {

// r^2 = ceil(Q/M)/2 * (ln(Mt) + eta ln q); the 2^i form with
// i = eta log2 q collapses to this, no log2 needed.
Interval r_game_enclosure(int qb, int m, int t, const Rat& eta, int q_total,
                          int prec) {
  long s = (qb + m - 1) / m;
  Interval inner = Interval(Rat(s, 2)) *
                   (ln_enclosure(Rat(long(m) * t), prec) +
                    Interval(eta) * ln_enclosure(Rat(q_total), prec));
  return sqrt_enclosure(inner, prec);
}

}  // namespace

Interval SynthParams::r1_enclosure(int t) const {
  return r_game_enclosure(q1, m1, t, eta1, q(), prec);
}

Interval SynthParams::r2_enclosure(int t) const {
  return r_game_enclosure(q2, m2, t, eta2, q(), prec);
}

ConditionReport check_conditions(const SynthParams& params, const Channel& c) {
  if (c.empty()) throw std::invalid_argument("check_conditions: empty channel");
  const int t = c.t();
  const int k = c.order();
  const int ck = c_k_constant(k);
  const ChannelStats st = stats(c);
  ConditionReport report;

  auto decide = [&](auto make_tri) {
    Tri r = Tri::maybe;
    for (int p = params.prec; p <= 2048 && r == Tri::maybe; p *= 2) r = make_tri(p);
    return r;
  };

  // 1 <= k-i <= k packing conditions
  Tri packing_all = Tri::yes;
  for (int rho = k; rho >= 1; --rho) {
    const int i = k - rho;
    BoundReport line;
    line.name = "packing_radius_" + std::to_string(rho);
    line.relation =
        "alpha sum_j p_{k-i}^{(j)} G(q1,M1,r1,j) <= A_t(q2-c_k,2(k-i)+1) - "
        "q^{-eta2} t^{q2} / b(q2,t,k-i)";
    if (params.q2 <= ck) {
      line.satisfied = Tri::no;
      line.note = "q2 <= c_k: no room for the layered packing";
      packing_all = Tri::no;
      report.lines.push_back(std::move(line));
      continue;
    }
    long long code_size = varshamov_code(t, params.q2 - ck, rho).size;
    Tri sat = decide([&](int prec) {
      Interval r1 = r_game_enclosure(params.q1, params.m1, t, params.eta1,
                                     params.q(), prec);
      Interval lhs(Rat(0));
      for (int j = 0; j <= i; ++j)
        lhs = lhs + Interval(to_rat(st.p.at(rho).at(j))) *
                        g_bound_enclosure(params.q1, params.m1, r1, j, k, t);
      lhs = Interval(to_rat(params.alpha)) * lhs;
      Interval qpow = pow_enclosure(Rat(params.q()), -params.eta2, prec);
      Rat tq2(ipow(Int(t), unsigned(params.q2)));
      Rat ball = to_rat(ball_size(params.q2, t, rho));
      Interval rhs = Interval(to_rat(code_size)) - qpow * Interval(tq2 / ball);
      line.lhs = lhs;
      line.rhs = rhs;
      return cmp_le(lhs, rhs);
    });
    line.satisfied = sat;
    if (sat != Tri::yes && packing_all == Tri::yes)
      packing_all = (sat == Tri::no) ? Tri::no : Tri::maybe;
    report.lines.push_back(std::move(line));
  }
  report.packing = packing_all;

  // original volume condition
  {
    BoundReport line;
    line.name = "volume_original";
    line.relation =
        "alpha sum_i sum_j E_i G(q1,M1,r1,j) G(q2,M2,r2,i-j) <= t^{q2}";
    Tri sat = decide([&](int prec) {
      Interval r1 = r_game_enclosure(params.q1, params.m1, t, params.eta1,
                                     params.q(), prec);
      Interval r2 = r_game_enclosure(params.q2, params.m2, t, params.eta2,
                                     params.q(), prec);
      Interval lhs(Rat(0));
      for (int i = 0; i <= k; ++i) {
        if (st.e.at(i) == 0) continue;
        for (int j = 0; j <= i; ++j)
          lhs = lhs + Interval(to_rat(st.e.at(i))) *
                          g_bound_enclosure(params.q1, params.m1, r1, j, k, t) *
                          g_bound_enclosure(params.q2, params.m2, r2, i - j, k, t);
      }
      lhs = Interval(to_rat(params.alpha)) * lhs;
      Interval rhs(Rat(ipow(Int(t), unsigned(params.q2))));
      line.lhs = lhs;
      line.rhs = rhs;
      return cmp_le(lhs, rhs);
    });
    line.satisfied = sat;
    report.volume_original = sat;
    report.lines.push_back(std::move(line));
  }

  // pathological volume condition
  {
    BoundReport line;
    line.name = "volume_pathological";
    line.relation =
        "alpha sum E_i H(q1,..,j) H(q2,..,i-j) + alpha' sum_j p_0^{(j)} "
        "H(q1,..,j) >= t^{q2}";
    Tri sat = decide([&](int prec) {
      Interval r1 = r_game_enclosure(params.q1, params.m1, t, params.eta1,
                                     params.q(), prec);
      Interval r2 = r_game_enclosure(params.q2, params.m2, t, params.eta2,
                                     params.q(), prec);
      Interval lhs(Rat(0));
      for (int i = 0; i <= k; ++i) {
        if (st.e.at(i) == 0) continue;
        for (int j = 0; j <= i; ++j)
          lhs = lhs + Interval(to_rat(st.e.at(i))) *
                          h_bound_enclosure(params.q1, params.m1, r1, j, k, t) *
                          h_bound_enclosure(params.q2, params.m2, r2, i - j, k, t);
      }
      lhs = Interval(to_rat(params.alpha)) * lhs;
      Interval fill(Rat(0));
      for (int j = 0; j <= k; ++j)
        fill = fill + Interval(to_rat(st.p.at(0).at(j))) *
                          h_bound_enclosure(params.q1, params.m1, r1, j, k, t);
      lhs = lhs + Interval(to_rat(params.alpha_prime)) * fill;
      Interval rhs(Rat(ipow(Int(t), unsigned(params.q2))));
      line.lhs = lhs;
      line.rhs = rhs;
      return cmp_le(rhs, lhs);  // lhs >= rhs
    });
    line.satisfied = sat;
    report.volume_pathological = sat;
    report.lines.push_back(std::move(line));
  }
  return report;
}

DPacking build_D_packing(int q2, int k, int t,
                         const std::vector<long long>& demands,
                         const BalanceSpec* prune, std::uint64_t code_cap) {
  if (k < 1) throw std::invalid_argument("build_D_packing: k >= 1");
  const int ck = c_k_constant(k);
  if (q2 <= ck) throw std::invalid_argument("build_D_packing: need q2 > c_k");
  DPacking d;
  d.q2 = q2;
  d.k = k;
  d.t = t;
  d.c_k = ck;
  d.centers.assign(k + 1, {});
  // prefix blocks: radius k gets the first k digits, radius rho < k gets a
  // block of rho+1 digits; blocks in decreasing radius order
  std::vector<int> offset(k + 1, 0), blocklen(k + 1, 0);
  {
    int pos = 0;
    for (int rho = k; rho >= 1; --rho) {
      int len = (rho == k) ? k : rho + 1;
      offset[rho] = pos;
      blocklen[rho] = len;
      pos += len;
    }
    if (pos != ck) throw std::logic_error("build_D_packing: prefix lengths != c_k");
  }
  for (int rho = 1; rho <= k; ++rho) {
    CodeResult code = varshamov_code(t, q2 - ck, rho, code_cap);
    if (!code.materialized)
      throw std::runtime_error("build_D_packing: code not materialized");
    std::vector<Word>& centers = d.centers[rho];
    for (const Word& cw : code.words) {
      Word center;
      for (int i = 0; i < ck; ++i)
        center.push_back(i >= offset[rho] && i < offset[rho] + blocklen[rho] ? 1 : 0);
      center = center.concat(cw);
      if (prune) {
        // drop centers whose entire ball misses the balanced set
        if (!distance_to_balanced(center, *prune, rho).has_value()) continue;
      }
      centers.push_back(center);
    }
    if (!demands.empty()) {
      long long want = rho < int(demands.size()) ? demands[rho] : 0;
      if (want > static_cast<long long>(centers.size()))
        throw std::runtime_error("build_D_packing: insufficient code size for demand");
      centers.resize(std::size_t(want));
    }
  }
  // construction invariant: centers of radii rho >= rho' sit at distance
  // >= rho + rho' + 1, so all balls are pairwise disjoint
  for (int r1 = 1; r1 <= k; ++r1)
    for (int r2 = r1; r2 <= k; ++r2)
      for (std::size_t a = 0; a < d.centers[r1].size(); ++a)
        for (std::size_t b = (r1 == r2 ? a + 1 : std::size_t(0));
             b < d.centers[r2].size(); ++b)
          if (hamming_distance(d.centers[r1][a], d.centers[r2][b]) < r1 + r2 + 1)
            throw std::logic_error("build_D_packing: center distance violated");
  return d;
}

PlacementProblem d_packing_problem(const DPacking& d) {
  PlacementProblem p;
  p.q = d.q2;
  p.t = d.t;
  p.mode = PlacementMode::packing;
  for (int rho = 1; rho <= d.k; ++rho)
    p.demand.emplace_back(Channel::symmetric(d.t, rho),
                          static_cast<long long>(d.centers[rho].size()));
  return p;
}

Placement d_packing_placement(const DPacking& d) {
  Placement pl;
  for (int rho = 1; rho <= d.k; ++rho)
    for (const Word& center : d.centers[rho])
      pl.stems.emplace_back(center, rho - 1);
  return pl;
}

std::pair<LieString, Word> nondegen_witness(const Word& w, const Channel& c,
                                            Variant variant) {
  if (c.empty()) throw std::invalid_argument("nondegen_witness: empty channel");
  const int k = c.order();
  if (w.length() < c.t() * (k - 1) + 1)
    throw std::invalid_argument("nondegen_witness: word shorter than t(k-1)+1");
  if (!is_nondegenerate(c, variant))
    throw std::invalid_argument("nondegen_witness: degenerate channel");
  if (c.contains_epsilon()) return {LieString{}, w};

  // most frequent letter of w occurs at least ceil(Q/t) >= k times
  std::vector<int> freq(c.t(), 0);
  for (int i = 0; i < w.length(); ++i) freq[w[i]] += 1;
  int letter = int(std::max_element(freq.begin(), freq.end()) - freq.begin());

  // shortest string of the required single-letter form
  const LieString* u = nullptr;
  for (const LieString& s : c.strings()) {
    if (s.empty()) continue;
    bool all = true;
    for (const Lie& l : s) {
      int side = (variant == Variant::original) ? l.truth : l.reply;
      if (side != letter) {
        all = false;
        break;
      }
    }
    if (all) {
      u = &s;
      break;
    }
  }
  if (!u) throw std::logic_error("nondegen_witness: no single-letter string");

  Word partner = w;
  std::size_t used = 0;
  for (int i = 0; i < w.length() && used < u->size(); ++i) {
    if (w[i] == letter) {
      if (variant == Variant::original)
        partner.set(i, (*u)[used].reply);  // w -u-> partner
      else
        partner.set(i, (*u)[used].truth);  // partner -u-> w
      ++used;
    }
  }
  if (used != u->size())
    throw std::logic_error("nondegen_witness: not enough positions");
  return {*u, partner};
}

namespace {

std::vector<Word> balanced_words(const BalanceSpec& spec) {
  std::vector<Word> out;
  std::uint64_t total = upow64(spec.t, spec.q);
  for (std::uint64_t i = 0; i < total; ++i) {
    Word w = Word::from_index(i, spec.q, spec.t);
    if (is_balanced(w, spec)) out.push_back(w);
  }
  return out;
}

struct ResponsePlan {
  std::vector<Word> second;  // per element
  bool ok = true;
  std::string reason;
};

// place elements alive after response w' into T^{q2}: orders >= 1 consume
// layered-packing centers, {e}-classes become singletons in free space
ResponsePlan plan_packing_response(const SuffixFamily& fam,
                                   const std::vector<Word>& first_batch,
                                   const Word& response, int q2,
                                   const DPacking& d) {
  const int t = fam.t();
  const long long n = static_cast<long long>(first_batch.size());
  ResponsePlan plan;
  plan.second.assign(std::size_t(n), Word::from_index(0, q2, t));
  std::vector<std::size_t> next_center(d.k + 1, 0);
  std::uint64_t total = upow64(t, q2);
  WordMask occupied(total);
  std::vector<long long> singles;
  for (long long e = 0; e < n; ++e) {
    LieString u = mismatch_string(first_batch[std::size_t(e)], response);
    int id = fam.walk(fam.root_id(), u);
    if (fam.is_empty(id) || fam.min_length(id) > q2) continue;  // dead
    int rho = fam.state_order(id);
    if (rho == 0) {
      singles.push_back(e);
      continue;
    }
    std::size_t& cursor = next_center[rho];
    if (cursor >= d.centers[rho].size()) {
      plan.ok = false;
      plan.reason = "layered packing out of radius-" + std::to_string(rho) +
                    " centers (packing condition too tight for this response)";
      return plan;
    }
    Word center = d.centers[rho][cursor++];
    plan.second[std::size_t(e)] = center;
    for (const Word& wp : shadow(center, fam.channel(id)))
      occupied.set(wp.index(t));
  }
  std::uint64_t cursor = 0;
  for (long long e : singles) {
    while (cursor < total && occupied.test(cursor)) ++cursor;
    if (cursor == total) {
      plan.ok = false;
      plan.reason = "no free word left for a singleton (volume condition too tight)";
      return plan;
    }
    plan.second[std::size_t(e)] = Word::from_index(cursor, q2, t);
    occupied.set(cursor);
  }
  return plan;
}

}  // namespace

SynthResult synth_original(long long n, const SynthParams& params, const Channel& c) {
  SynthResult result;
  result.report = check_conditions(params, c);
  const int t = c.t();
  const int k = c.empty() ? 0 : c.order();
  if (k < 1) {
    result.reason = "channel order must be >= 1";
    return result;
  }
  if (result.report.packing != Tri::yes || result.report.volume_original != Tri::yes) {
    result.reason = "packing/volume conditions unsatisfied";
    return result;
  }
  BalanceSpec bal1 = params.balance1(t);
  BalanceSpec bal2 = params.balance2(t);
  std::vector<Word> bal = balanced_words(bal1);
  long long capacity = params.alpha * static_cast<long long>(bal.size());
  if (n > capacity) {
    result.reason = "n exceeds alpha * |balanced(T^{q1})| = " + std::to_string(capacity);
    return result;
  }

  TwoBatchStrategy s(c);
  s.variant = Variant::original;
  s.q1 = params.q1;
  s.q2 = params.q2;
  for (long long e = 0; e < n; ++e)
    s.first_batch.push_back(bal[std::size_t(e / params.alpha)]);

  SuffixFamily fam(c);
  DPacking d = build_D_packing(params.q2, k, t, {}, &bal2);
  std::uint64_t responses = upow64(t, params.q1);
  s.second_batch.reserve(responses);
  for (std::uint64_t r = 0; r < responses; ++r) {
    Word response = Word::from_index(r, params.q1, t);
    ResponsePlan plan =
        plan_packing_response(fam, s.first_batch, response, params.q2, d);
    if (!plan.ok) {
      result.reason = plan.reason;
      return result;
    }
    s.second_batch.push_back(std::move(plan.second));
  }

  if (auto witness = carole_break_original(s)) {
    result.reason = "verification failed at response " + witness->response.str();
    return result;
  }
  result.strategy = std::move(s);
  return result;
}

SynthResult synth_pathological(long long n, const SynthParams& params,
                               const Channel& c) {
  SynthResult result;
  result.report = check_conditions(params, c);
  const int t = c.t();
  const int k = c.empty() ? 0 : c.order();
  if (k < 1) {
    result.reason = "channel order must be >= 1";
    return result;
  }
  if (!is_nondegenerate(c, Variant::pathological)) {
    result.reason = "channel degenerate for the pathological variant";
    return result;
  }
  if (params.q1 < t * (k - 1) + 1) {
    result.reason = "need q1 >= t(k-1)+1";
    return result;
  }
  Int tq2_big = ipow(Int(t), unsigned(params.q2));
  if (!tq2_big.fits_slong_p()) {
    result.reason = "t^{q2} out of range";
    return result;
  }
  const long long tq2 = tq2_big.get_si();
  const long long per_balanced = params.alpha + params.alpha_prime;
  const bool shortcut = per_balanced >= tq2;
  if (!shortcut &&
      (result.report.packing != Tri::yes ||
       result.report.volume_pathological != Tri::yes)) {
    result.reason =
        "alpha + alpha' < t^{q2} and packing/pathological volume conditions "
        "unsatisfied";
    return result;
  }

  BalanceSpec bal1 = params.balance1(t);
  BalanceSpec bal2 = params.balance2(t);
  std::uint64_t words1 = upow64(t, params.q1);
  std::vector<bool> word_balanced(words1);
  long long nbal = 0;
  for (std::uint64_t i = 0; i < words1; ++i) {
    word_balanced[i] = is_balanced(Word::from_index(i, params.q1, t), bal1);
    nbal += word_balanced[i];
  }
  long long nunbal = static_cast<long long>(words1) - nbal;
  long long need = per_balanced * nbal + tq2 * nunbal;
  if (n < need) {
    result.reason = "n below construction demand " + std::to_string(need);
    return result;
  }

  TwoBatchStrategy s(c);
  s.variant = Variant::pathological;
  s.q1 = params.q1;
  s.q2 = params.q2;
  // elements_of[word] = element ids sitting on that truthful word
  std::vector<std::vector<long long>> elements_of(words1);
  {
    long long e = 0;
    for (std::uint64_t i = 0; i < words1; ++i) {
      long long quota = word_balanced[i] ? per_balanced : tq2;
      for (long long j = 0; j < quota; ++j) elements_of[i].push_back(e++);
    }
    // extras beyond the construction demand sit anywhere (word 0)
    while (e < n) elements_of[0].push_back(e++);
    s.first_batch.assign(std::size_t(n), Word{});
    for (std::uint64_t i = 0; i < words1; ++i) {
      Word w = Word::from_index(i, params.q1, t);
      for (long long id : elements_of[i]) s.first_batch[std::size_t(id)] = w;
    }
  }

  SuffixFamily fam(c);
  std::optional<DPacking> d;
  if (!shortcut) d = build_D_packing(params.q2, k, t, {}, &bal2);

  std::uint64_t total2 = upow64(t, params.q2);
  s.second_batch.reserve(words1);
  for (std::uint64_t r = 0; r < words1; ++r) {
    Word response = Word::from_index(r, params.q1, t);
    std::vector<Word> second(std::size_t(n), Word::from_index(0, params.q2, t));

    if (shortcut) {
      // some word w with w -u-> response and u in C has >= t^{q2} elements;
      // spread them over all of T^{q2}
      auto [u, w] = nondegen_witness(response, c, Variant::pathological);
      std::uint64_t wi = w.index(t);
      const std::vector<long long>& ids = elements_of[wi];
      if (static_cast<long long>(ids.size()) < tq2)
        throw std::logic_error("synth_pathological: witness word underfilled");
      for (long long z = 0; z < tq2; ++z)
        second[std::size_t(ids[std::size_t(z)])] =
            Word::from_index(std::uint64_t(z), params.q2, t);
      s.second_batch.push_back(std::move(second));
      continue;
    }

    // full Claim-3 route: alpha-part packing, then epsilon-shadow completion
    WordMask covered(total2);
    std::vector<std::size_t> next_center(k + 1, 0);
    std::vector<long long> eps_pool;  // alive elements with epsilon, unplaced
    for (std::uint64_t wi = 0; wi < words1; ++wi) {
      const std::vector<long long>& ids = elements_of[wi];
      LieString u = mismatch_string(Word::from_index(wi, params.q1, t), response);
      int id = fam.walk(fam.root_id(), u);
      if (fam.is_empty(id) || fam.min_length(id) > params.q2) continue;
      int rho = fam.state_order(id);
      for (std::size_t j = 0; j < ids.size(); ++j) {
        long long e = ids[j];
        bool alpha_part = static_cast<long long>(j) < params.alpha;
        if (alpha_part && rho >= 1) {
          std::size_t& cursor = next_center[rho];
          if (cursor >= d->centers[rho].size()) {
            result.reason = "layered packing out of centers (pathological)";
            return result;
          }
          Word center = d->centers[rho][cursor++];
          second[std::size_t(e)] = center;
          for (const Word& wp : shadow(center, fam.channel(id)))
            covered.set(wp.index(t));
        } else if (fam.has_epsilon(id)) {
          eps_pool.push_back(e);
        }
      }
    }
    // alpha-part singletons and alpha'-part fillers both come from the
    // epsilon pool; place them on uncovered words first
    std::size_t pool_at = 0;
    for (std::uint64_t z = covered.first_unset(); z < total2;
         z = covered.first_unset()) {
      if (pool_at >= eps_pool.size()) {
        result.reason = "covering completion ran out of epsilon shadows";
        return result;
      }
      long long e = eps_pool[pool_at++];
      second[std::size_t(e)] = Word::from_index(z, params.q2, t);
      covered.set(z);
    }
    s.second_batch.push_back(std::move(second));
  }

  if (auto witness = carole_break_pathological(s)) {
    result.reason = "verification failed at response " + witness->response.str();
    return result;
  }
  result.strategy = std::move(s);
  return result;
}

}  // namespace ulam
