#include "ulam/bounds.hpp"

#include <functional>

#include <algorithm>

#include "ulam/codes.hpp"

namespace ulam {

int c_k_constant(int k) {
  if (k < 1) throw std::invalid_argument("c_k_constant: k >= 1");
  return (k * k + 3 * k - 2) / 2;
}

Rat sphere_bound(int q, int k, int t, long long ek) {
  if (ek < 1 || k > q || k < 0) throw std::invalid_argument("sphere_bound: bad inputs");
  Rat num(ipow(Int(t), unsigned(q + k)));
  Rat den(to_int(ek) * binom(q, k));
  Rat r = num / den;
  r.canonicalize();
  return r;
}

Int varshamov_lower(int t, int qlen, int radius) {
  if (!is_prime_power(t))
    throw std::invalid_argument("varshamov_lower: t must be a prime power");
  if (qlen < 1 || radius < 0) throw std::invalid_argument("varshamov_lower: bad inputs");
  Int inner = 1;
  for (int i = 0; i <= 2 * radius - 1; ++i)
    inner += binom(qlen - 1, i) * ipow(Int(t - 1), i);
  // ceil(log_t(inner))
  int m = 0;
  Int power = 1;
  while (power < inner) {
    power *= t;
    ++m;
  }
  if (m > qlen) return Int(1);
  return ipow(Int(t), unsigned(qlen - m));
}

Rat alphabet_change_lower(int t1, int t2, int qlen, int radius, const Rat& a_t2) {
  if (t2 < t1 || t1 < 2) throw std::invalid_argument("alphabet_change_lower: need t2 >= t1 >= 2");
  (void)radius;
  Rat scale = rat_pow(Rat(t1, t2), qlen);
  return scale * a_t2;
}

Rat asymp_varshamov(int t, int qlen, int radius, int k, const Rat& c9) {
  if (radius < 1 || radius > k)
    throw std::invalid_argument("asymp_varshamov: need 1 <= R <= k");
  int ck = c_k_constant(k);
  if (qlen - ck - 1 < 0) throw std::invalid_argument("asymp_varshamov: Q too small");
  Int fact = 1;
  for (int i = 2; i <= 2 * radius - 1; ++i) fact *= i;
  Rat lead(fact, ipow(Int(2), unsigned(2 * radius)) * ipow(Int(t - 1), unsigned(2 * radius - 1)));
  Rat tail(ipow(Int(t), unsigned(qlen - ck - 1)), ipow(Int(qlen), unsigned(2 * radius - 1)));
  return c9 * lead * tail;
}

const Rat& BoundConstants::at(const std::string& name) const {
  auto it = c.find(name);
  if (it == c.end()) throw std::invalid_argument("BoundConstants: missing " + name);
  return it->second;
}

namespace {

// sqrt((k+2)/2) scaled constants from the proofs
Interval half_root(int k, int prec) {
  return sqrt_enclosure(Rat(k + 2, 2), prec);
}

Interval c10_floor(int t, int k, int prec) {  // t k (k+1) sqrt((k+2)/2)
  return Interval(Rat(long(t) * k * (k + 1))) * half_root(k, prec);
}

Interval c13_floor(int t, int k, int prec) {  // t^2 k (k+1) sqrt((k+2)/2)
  return Interval(Rat(long(t) * t * k * (k + 1))) * half_root(k, prec);
}

Interval c3_floor(int t, int k, int prec) {  // t(t-1) k (k+1) sqrt((k+2)/2)
  return Interval(Rat(long(t) * (t - 1) * k * (k + 1))) * half_root(k, prec);
}

Interval c14_value(int t, int k, int prec) {  // t(t-1) k sqrt((k+2)/2)
  return Interval(Rat(long(t) * (t - 1) * k)) * half_root(k, prec);
}

Interval c6_floor(int t, int k, int prec) {  // t k sqrt((k+2)/2)
  return Interval(Rat(long(t) * k)) * half_root(k, prec);
}

// ((2k-1)! t^{-c_k-k-1} E_k / (2^{2k} (t-1)^{2k-1} k!))^{1/(2k-1)}
Interval c11_ceiling(int t, int k, long long ek, int prec) {
  Int fact2k1 = 1;
  for (int i = 2; i <= 2 * k - 1; ++i) fact2k1 *= i;
  Int factk = 1;
  for (int i = 2; i <= k; ++i) factk *= i;
  int ck = c_k_constant(k);
  Rat inner(fact2k1 * to_int(ek),
            ipow(Int(t), unsigned(ck + k + 1)) * ipow(Int(2), unsigned(2 * k)) *
                ipow(Int(t - 1), unsigned(2 * k - 1)) * factk);
  inner.canonicalize();
  return root_enclosure(inner, unsigned(2 * k - 1), prec);
}

Tri certain_gt(const Rat& a, const Interval& b) {
  if (a > b.hi) return Tri::yes;
  if (a <= b.lo) return Tri::no;
  return Tri::maybe;
}

Tri certain_lt(const Rat& a, const Interval& b) {
  if (a < b.lo) return Tri::yes;
  if (a >= b.hi) return Tri::no;
  return Tri::maybe;
}

}  // namespace

BoundConstants BoundConstants::defaults(int t, int k, long long ek, int prec) {
  BoundConstants bc;
  const Rat up(65, 64), down(63, 64);
  Rat c10 = c10_floor(t, k, prec).hi * up;
  Rat c2 = c10 * up;
  Rat c9(1, 2), c12(2);
  Rat c11 = c11_ceiling(t, k, ek, prec).lo * down;
  // c_1 below both c_11 and (c9/c12)^{1/(2k-1)} c_11
  Rat shrink = root_enclosure(c9 / c12, unsigned(2 * k - 1), prec).lo;
  Rat c1 = std::min(c11, Rat(shrink * c11)) * down;
  Rat c13 = std::max(c13_floor(t, k, prec).hi, Rat(c3_floor(t, k, prec).hi + c10)) * up;
  Rat c3 = std::max(c3_floor(t, k, prec).hi, Rat(c13 - c10)) * up;
  Rat c14 = c14_value(t, k, prec).hi * up;
  Rat c5 = c14 * up;
  Rat c4 = (k == 1) ? Rat(1, 8) : Rat(k) + Rat(1, 8);
  Rat c6 = c6_floor(t, k, prec).hi * up;
  bc.c = {{"c1", c1},   {"c2", c2},   {"c3", c3},   {"c4", c4},
          {"c5", c5},   {"c6", c6},   {"c7", Rat(1)}, {"c8", Rat(1)},
          {"c9", c9},   {"c10", c10}, {"c11", c11}, {"c12", c12},
          {"c13", c13}, {"c14", c14}};
  bc.validate(t, k, ek, prec);
  return bc;
}

void BoundConstants::validate(int t, int k, long long ek, int prec) const {
  struct Check {
    std::string what;
    std::function<Tri(int)> eval;
  };
  const BoundConstants& bc = *this;
  std::vector<Check> checks;
  checks.push_back({"c2 > c10",
                    [&](int) { return bc.at("c2") > bc.at("c10") ? Tri::yes : Tri::no; }});
  checks.push_back({"c10 > t k (k+1) sqrt((k+2)/2)",
                    [&](int p) { return certain_gt(bc.at("c10"), c10_floor(t, k, p)); }});
  checks.push_back({"0 < c9 < 1", [&](int) {
                      return (bc.at("c9") > 0 && bc.at("c9") < 1) ? Tri::yes : Tri::no;
                    }});
  checks.push_back({"c12 > 1",
                    [&](int) { return bc.at("c12") > 1 ? Tri::yes : Tri::no; }});
  checks.push_back({"c1 < c11",
                    [&](int) { return bc.at("c1") < bc.at("c11") ? Tri::yes : Tri::no; }});
  checks.push_back({"c11 < ((2k-1)! t^{-c_k-k-1} E_k / (2^{2k}(t-1)^{2k-1} k!))^{1/(2k-1)}",
                    [&](int p) { return certain_lt(bc.at("c11"), c11_ceiling(t, k, ek, p)); }});
  checks.push_back({"c1 < (c9/c12)^{1/(2k-1)} c11", [&](int p) {
                      Interval rhs = root_enclosure(bc.at("c9") / bc.at("c12"),
                                                    unsigned(2 * k - 1), p) *
                                     Interval(bc.at("c11"));
                      return certain_lt(bc.at("c1"), rhs);
                    }});
  checks.push_back({"c13 > t^2 k (k+1) sqrt((k+2)/2)",
                    [&](int p) { return certain_gt(bc.at("c13"), c13_floor(t, k, p)); }});
  checks.push_back({"c3 > t(t-1) k (k+1) sqrt((k+2)/2)",
                    [&](int p) { return certain_gt(bc.at("c3"), c3_floor(t, k, p)); }});
  checks.push_back({"c13 - t(t-1)k(k+1)sqrt((k+2)/2) > c10", [&](int p) {
                      Interval gap = Interval(bc.at("c13")) - c3_floor(t, k, p);
                      if (gap.lo > bc.at("c10")) return Tri::yes;
                      if (gap.hi <= bc.at("c10")) return Tri::no;
                      return Tri::maybe;
                    }});
  checks.push_back({"c3 > c13 - c10", [&](int) {
                      return bc.at("c3") > bc.at("c13") - bc.at("c10") ? Tri::yes : Tri::no;
                    }});
  checks.push_back({"c14 >= t(t-1) k sqrt((k+2)/2)", [&](int p) {
                      Interval v = c14_value(t, k, p);
                      if (bc.at("c14") >= v.hi) return Tri::yes;
                      if (bc.at("c14") < v.lo) return Tri::no;
                      return Tri::maybe;
                    }});
  checks.push_back({"c4 > k (c4 > 0 when k = 1)", [&](int) {
                      Rat floor_value = (k == 1) ? Rat(0) : Rat(k);
                      return bc.at("c4") > floor_value ? Tri::yes : Tri::no;
                    }});
  checks.push_back({"c5 > c14",
                    [&](int) { return bc.at("c5") > bc.at("c14") ? Tri::yes : Tri::no; }});
  checks.push_back({"c6 > t k sqrt((k+2)/2)",
                    [&](int p) { return certain_gt(bc.at("c6"), c6_floor(t, k, p)); }});

  for (const Check& check : checks) {
    Tri r = Tri::maybe;
    for (int p = prec; p <= 2048 && r == Tri::maybe; p *= 2) r = check.eval(p);
    if (r == Tri::no)
      throw std::invalid_argument("BoundConstants: violated: " + check.what);
    if (r == Tri::maybe)
      throw std::runtime_error("BoundConstants: indeterminate at max precision: " +
                               check.what);
  }
}

Interval theorem1_original_ratio(long q, long q2, const Rat& c2, int prec) {
  if (q < 2 || q2 < 1) throw std::invalid_argument("theorem1_original_ratio: bad q, q2");
  Interval root_ln = sqrt_enclosure(ln_enclosure(Rat(q), prec), prec);
  Interval cbrt_q2 = root_enclosure(Rat(q2), 3, prec);
  return Interval(Rat(1)) - Interval(c2) * root_ln / cbrt_q2;
}

namespace {

BoundReport value_report(const std::string& name, const Interval& v,
                         const std::string& relation) {
  BoundReport r;
  r.name = name;
  r.lhs = v;
  r.relation = relation;
  return r;
}

}  // namespace

std::vector<BoundReport> theorem1_thresholds(long q, long q1, long q2,
                                             const Channel& c,
                                             const BoundConstants& constants,
                                             int prec) {
  if (q1 + q2 != q) throw std::invalid_argument("theorem1_thresholds: q1+q2 != q");
  const int k = c.order();
  const long long ek = stats(c).e.at(k);
  Rat sphere = sphere_bound(int(q), k, c.t(), ek);
  Interval root_ln = sqrt_enclosure(ln_enclosure(Rat(q), prec), prec);
  Interval cbrt_q2 = root_enclosure(Rat(q2), 3, prec);
  Interval cbrt_q = root_enclosure(Rat(q), 3, prec);

  std::vector<BoundReport> out;
  {
    Interval thr = Interval(sphere) *
                   (Interval(Rat(1)) - Interval(constants.at("c2")) * root_ln / cbrt_q2);
    BoundReport r = value_report("paul_original_threshold", thr,
                                 "Paul wins original when n <= value");
    r.inputs = {{"q", std::to_string(q)}, {"q2", std::to_string(q2)}};
    out.push_back(std::move(r));
  }
  {
    Interval thr = Interval(sphere) *
                   (Interval(Rat(1)) + Interval(constants.at("c3")) * root_ln / cbrt_q);
    out.push_back(value_report("paul_pathological_threshold", thr,
                               "Paul wins pathological when n >= value"));
  }
  {
    // batch-size window with f(q) = ln q: (ln q)^{3/2} f(q) <= q2
    Interval lnq = ln_enclosure(Rat(q), prec);
    Interval lower = sqrt_enclosure(pow_nonneg(lnq, 3), prec) * lnq;
    BoundReport r;
    r.name = "window_lower";
    r.lhs = lower;
    r.rhs = Interval(Rat(q2));
    r.relation = "(ln q)^{3/2} f(q) <= q2, f = ln";
    r.satisfied = cmp_le(lower, Interval(Rat(q2)));
    out.push_back(std::move(r));
  }
  {
    Interval upper = Interval(constants.at("c1")) *
                     pow_enclosure(Rat(q), Rat(k, 2 * k - 1), prec);
    BoundReport r;
    r.name = "window_upper";
    r.lhs = Interval(Rat(q2));
    r.rhs = upper;
    r.relation = "q2 <= c1 q^{k/(2k-1)}";
    r.satisfied = cmp_le(Interval(Rat(q2)), upper);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> theorem2_thresholds(long q, long q1, long q2,
                                             const Channel& c,
                                             const BoundConstants& constants,
                                             int prec) {
  if (q1 + q2 != q) throw std::invalid_argument("theorem2_thresholds: q1+q2 != q");
  const int k = c.order();
  const long long ek = stats(c).e.at(k);
  Rat sphere = sphere_bound(int(q), k, c.t(), ek);
  Interval root_ln = sqrt_enclosure(ln_enclosure(Rat(q), prec), prec);
  long qmin = std::min(q1, q2), qmax = std::max(q1, q2);

  std::vector<BoundReport> out;
  {
    Interval corr = Interval(constants.at("c4")) * Interval(Rat(qmin, q)) +
                    Interval(constants.at("c5")) * root_ln /
                        root_enclosure(Rat(qmax), 3, prec);
    Interval thr = Interval(sphere) * (Interval(Rat(1)) + corr);
    out.push_back(value_report("carole_original_threshold", thr,
                               "Carole wins original when n >= value"));
  }
  {
    Interval thr = Interval(sphere) *
                   (Interval(Rat(1)) -
                    Interval(constants.at("c6")) * root_ln / root_enclosure(Rat(q), 3, prec));
    out.push_back(value_report("carole_pathological_threshold", thr,
                               "Carole wins pathological when n <= value"));
  }
  return out;
}

}  // namespace ulam
