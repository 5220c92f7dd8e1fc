#include "ulam/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace ulam {

std::vector<long long> survivors_of(const TwoBatchStrategy& s, const Word& w1,
                                    const Word& w2) {
  SuffixFamily fam(s.channel);
  std::vector<long long> out;
  std::uint64_t r1 = w1.index(s.channel.t());
  for (long long e = 0; e < s.n(); ++e) {
    LieString u = mismatch_string(s.first_batch[std::size_t(e)], w1);
    int id = fam.walk(fam.root_id(), u);
    if (fam.is_empty(id)) continue;
    LieString v = mismatch_string(s.second_batch.at(r1)[std::size_t(e)], w2);
    if (fam.has_epsilon(fam.walk(id, v))) out.push_back(e);
  }
  return out;
}

namespace {

// per first-batch response: survivor counts per second-batch response,
// via shadow accumulation
struct ResponseScan {
  const TwoBatchStrategy& s;
  SuffixFamily fam;
  std::uint64_t n1, n2;

  explicit ResponseScan(const TwoBatchStrategy& strategy)
      : s(strategy), fam(strategy.channel) {
    n1 = upow64(s.channel.t(), s.q1);
    n2 = upow64(s.channel.t(), s.q2);
  }

  // fills counts[z'] and, if wanted, a per-z' witness pair of elements
  void scan(std::uint64_t r1, std::vector<std::uint32_t>& counts,
            std::vector<std::array<long long, 2>>* firsts) const {
    const int t = s.channel.t();
    Word response = Word::from_index(r1, s.q1, t);
    std::fill(counts.begin(), counts.end(), 0);
    for (long long e = 0; e < s.n(); ++e) {
      LieString u = mismatch_string(s.first_batch[std::size_t(e)], response);
      int id = fam.walk(fam.root_id(), u);
      if (fam.is_empty(id) || fam.min_length(id) > s.q2) continue;
      const Word& z = s.second_batch.at(r1)[std::size_t(e)];
      for (const Word& zp : shadow(z, fam.channel(id))) {
        std::uint64_t zi = zp.index(t);
        if (firsts) {
          if (counts[zi] == 0)
            (*firsts)[zi][0] = e;
          else if (counts[zi] == 1)
            (*firsts)[zi][1] = e;
        }
        counts[zi] += 1;
      }
    }
  }
};

}  // namespace

ResponseSet response_set(const TwoBatchStrategy& s, long long element,
                         std::uint64_t cap) {
  SuffixFamily fam(s.channel);
  const int t = s.channel.t();
  std::uint64_t n1 = upow64(t, s.q1), n2 = upow64(t, s.q2);
  if (n1 * n2 > cap) throw CapExceeded("response_set: t^q exceeds cap");
  ResponseSet rs;
  rs.element = element;
  for (std::uint64_t r1 = 0; r1 < n1; ++r1) {
    Word w1 = Word::from_index(r1, s.q1, t);
    LieString u = mismatch_string(s.first_batch.at(std::size_t(element)), w1);
    int id = fam.walk(fam.root_id(), u);
    if (fam.is_empty(id)) continue;
    for (std::uint64_t r2 = 0; r2 < n2; ++r2) {
      Word w2 = Word::from_index(r2, s.q2, t);
      LieString v = mismatch_string(s.second_batch.at(r1).at(std::size_t(element)), w2);
      if (fam.has_epsilon(fam.walk(id, v))) rs.words.push_back(w1.concat(w2));
    }
  }
  return rs;
}

std::optional<BreakWitness> carole_break_original(const TwoBatchStrategy& s,
                                                  std::uint64_t cap) {
  ResponseScan scan(s);
  if (scan.n1 * scan.n2 > cap) throw CapExceeded("carole_break_original: cap");
  std::vector<std::uint32_t> counts(scan.n2);
  std::vector<std::array<long long, 2>> firsts(scan.n2);
  for (std::uint64_t r1 = 0; r1 < scan.n1; ++r1) {
    scan.scan(r1, counts, &firsts);
    for (std::uint64_t z = 0; z < scan.n2; ++z) {
      if (counts[z] >= 2) {
        BreakWitness w;
        w.response = Word::from_index(r1, s.q1, s.channel.t())
                         .concat(Word::from_index(z, s.q2, s.channel.t()));
        w.survivors = {firsts[z][0], firsts[z][1]};
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<BreakWitness> carole_break_pathological(const TwoBatchStrategy& s,
                                                      std::uint64_t cap) {
  ResponseScan scan(s);
  if (scan.n1 * scan.n2 > cap) throw CapExceeded("carole_break_pathological: cap");
  std::vector<std::uint32_t> counts(scan.n2);
  for (std::uint64_t r1 = 0; r1 < scan.n1; ++r1) {
    scan.scan(r1, counts, nullptr);
    for (std::uint64_t z = 0; z < scan.n2; ++z) {
      if (counts[z] == 0) {
        BreakWitness w;
        w.response = Word::from_index(r1, s.q1, s.channel.t())
                         .concat(Word::from_index(z, s.q2, s.channel.t()));
        return w;
      }
    }
  }
  return std::nullopt;
}

CaroleParams CaroleParams::defaults(const Channel& c, int q1, int q2) {
  CaroleParams p;
  p.m1 = std::max(1, int(std::ceil(std::cbrt(double(q1)))));
  p.m2 = std::max(1, int(std::ceil(std::cbrt(double(q2)))));
  p.m = std::max(1, int(std::ceil(std::cbrt(double(q1 + q2)))));
  p.eta1 = p.eta2 = p.eta = Rat(c.order() + 1);
  return p;
}

std::vector<BoundReport> carole_threshold_report(int q1, int q2, const Channel& c,
                                                 const CaroleParams& params,
                                                 const BoundConstants& constants) {
  const int t = c.t();
  const int k = c.order();
  const int q = q1 + q2;
  const ChannelStats st = stats(c);
  const long long ek = st.e.at(k);
  std::vector<BoundReport> out;
  const int prec = params.prec;

  auto r_enc = [&](int qb, int m, const Rat& eta) {
    long sec = (qb + m - 1) / m;
    Interval inner = Interval(Rat(sec, 2)) *
                     (ln_enclosure(Rat(long(m) * t), prec) +
                      Interval(eta) * ln_enclosure(Rat(q), prec));
    return sqrt_enclosure(inner, prec);
  };

  Rat tq(ipow(Int(t), unsigned(q)));
  {
    // n > t^q (E_k (H(q1,..,k)+H(q2,..,k)))^{-1} + (q^{-eta1}+q^{-eta2}) t^q
    BoundReport r;
    r.name = "carole_original_volume";
    r.relation =
        "Carole wins original when n > t^q / (E_k (H1_k + H2_k)) + "
        "(q^{-eta1} + q^{-eta2}) t^q";
    Interval h1 = h_bound_enclosure(q1, params.m1, r_enc(q1, params.m1, params.eta1),
                                    k, k, t);
    Interval h2 = h_bound_enclosure(q2, params.m2, r_enc(q2, params.m2, params.eta2),
                                    k, k, t);
    Interval hsum = (Interval(to_rat(ek)) * (h1 + h2));
    Interval atyp = (pow_enclosure(Rat(q), -params.eta1, prec) +
                     pow_enclosure(Rat(q), -params.eta2, prec)) *
                    Interval(tq);
    if (hsum.lo > 0) {
      r.lhs = Interval(tq) / hsum + atyp;
    } else {
      r.note = "H-terms vanish at these parameters; threshold degenerates to infinity";
    }
    out.push_back(std::move(r));
  }
  {
    // n < t^q (1 - q^{-eta}) / sum_i E_i C(M+i-1,i) ((1/t)ceil(q/M)+r+1)^i
    BoundReport r;
    r.name = "carole_pathological_volume";
    r.relation =
        "Carole wins pathological when n < t^q (1 - q^{-eta}) / "
        "sum_i E_i C(M+i-1,i) ((1/t)ceil(q/M) + r + 1)^i";
    Interval rq = r_enc(q, params.m, params.eta);
    long sec = (q + params.m - 1) / params.m;
    Interval base = Interval(Rat(sec, t)) + rq + Interval(Rat(1));
    Interval denom(Rat(0));
    for (int i = 0; i <= k; ++i) {
      if (st.e.at(i) == 0) continue;
      denom = denom + Interval(Rat(to_int(st.e.at(i)) * binom(params.m + i - 1, i))) *
                          pow_nonneg(base, unsigned(i));
    }
    Interval scale = Interval(Rat(1)) - pow_enclosure(Rat(q), -params.eta, prec);
    r.lhs = Interval(tq) * scale / denom;
    out.push_back(std::move(r));
  }
  for (BoundReport& r : theorem2_thresholds(q, q1, q2, c, constants, prec))
    out.push_back(std::move(r));
  return out;
}

}  // namespace ulam
