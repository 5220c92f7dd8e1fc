// Exact rationals and rigorous real enclosures.
//
// All inequality checks in the bound machinery go through rational
// interval enclosures with outward rounding, so a reported "satisfied"
// is a proof, never a float guess.  Transcendental endpoints (ln, sqrt,
// n-th roots, powers) are produced by MPFR with directed rounding and
// converted exactly to rationals.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ulam {

using Int = mpz_class;
using Rat = mpq_class;

enum class Tri { yes, no, maybe };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "indeterminate";
  }
}

// Closed interval [lo, hi] of rationals enclosing one exact real value.
struct Interval {
  Rat lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(const Rat& v) : lo(v), hi(v) {}  // NOLINT: implicit by design
  Interval(Rat l, Rat h);

  static Interval exact(long v) { return Interval(Rat(v)); }

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  double mid() const;
  std::string str() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // 0 not in b

// max(interval, rational), applied endpoint-wise
Interval clamp_min(const Interval& a, const Rat& floor_value);
// a^j for integer j >= 0; requires a.lo >= 0 when j > 1 (callers clamp first)
Interval pow_nonneg(const Interval& a, unsigned j);

// Certain comparisons; `maybe` when the enclosures overlap.
Tri cmp_le(const Interval& a, const Interval& b);
Tri cmp_lt(const Interval& a, const Interval& b);

// Enclosures at `prec` bits of working precision (outward rounding).
Interval ln_enclosure(const Rat& x, int prec);                    // x > 0
Interval sqrt_enclosure(const Rat& x, int prec);                  // x >= 0
Interval root_enclosure(const Rat& x, unsigned long n, int prec); // x >= 0, n >= 1
Interval pow_enclosure(const Rat& base, const Rat& expo, int prec);  // base > 0
Interval sqrt_enclosure(const Interval& x, int prec);
Interval ln_enclosure(const Interval& x, int prec);
Interval root_enclosure(const Interval& x, unsigned long n, int prec);

Int binom(unsigned long n, unsigned long k);
Int ipow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);  // negative e allowed, base != 0

// gmpxx has no long long constructors; this platform is LP64
static_assert(sizeof(long) >= 8, "64-bit long required");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }
inline Rat to_rat(unsigned long long v) {
  if (v > static_cast<unsigned long long>(~0UL >> 1))
    throw std::overflow_error("to_rat: value too large");
  return Rat(static_cast<long>(v));
}

// t^e as unsigned 64-bit; throws std::overflow_error when it does not fit.
unsigned long long upow64(unsigned base, unsigned e);

}  // namespace ulam
