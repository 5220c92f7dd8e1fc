#include "ulam/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

namespace ulam {

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
}

double Interval::mid() const {
  Rat m = (lo + hi) / 2;
  return m.get_d();
}

std::string Interval::str() const {
  std::ostringstream os;
  if (is_point()) {
    os << lo.get_str();
  } else {
    os << "[" << lo.get_d() << ", " << hi.get_d() << "]";
  }
  return os.str();
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return Interval(std::min(std::min(c1, c2), std::min(c3, c4)),
                  std::max(std::max(c1, c2), std::max(c3, c4)));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (sgn(b.lo) <= 0 && sgn(b.hi) >= 0)
    throw std::domain_error("Interval division by interval containing 0");
  Rat c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
  return Interval(std::min(std::min(c1, c2), std::min(c3, c4)),
                  std::max(std::max(c1, c2), std::max(c3, c4)));
}

Interval clamp_min(const Interval& a, const Rat& floor_value) {
  return Interval(std::max(a.lo, floor_value), std::max(a.hi, floor_value));
}

Interval pow_nonneg(const Interval& a, unsigned j) {
  if (j == 0) return Interval(Rat(1));
  if (j == 1) return a;
  if (sgn(a.lo) < 0) throw std::domain_error("pow_nonneg: negative base");
  Rat lo = rat_pow(a.lo == 0 ? Rat(0) : a.lo, static_cast<long>(j));
  if (a.lo == 0) lo = 0;
  Rat hi = rat_pow(a.hi == 0 ? Rat(0) : a.hi, static_cast<long>(j));
  if (a.hi == 0) hi = 0;
  return Interval(lo, hi);
}

Tri cmp_le(const Interval& a, const Interval& b) {
  if (a.hi <= b.lo) return Tri::yes;
  if (a.lo > b.hi) return Tri::no;
  return Tri::maybe;
}

Tri cmp_lt(const Interval& a, const Interval& b) {
  if (a.hi < b.lo) return Tri::yes;
  if (a.lo >= b.hi) return Tri::no;
  return Tri::maybe;
}

namespace {

// Exact value of a finite MPFR number as a rational: mantissa * 2^exp.
Rat rat_from_mpfr(const mpfr_t f) {
  if (mpfr_zero_p(f)) return Rat(0);
  if (!mpfr_number_p(f)) throw std::overflow_error("mpfr value not finite");
  Int z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), f);
  Rat r(z);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

class Mpfr {
 public:
  explicit Mpfr(int prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// f(set_q(x)) with both roundings, for f monotone increasing.
template <typename Fn>
Interval monotone_enclosure(const Rat& x, int prec, Fn f) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  f(lo.get(), lo.get(), MPFR_RNDD);
  f(hi.get(), hi.get(), MPFR_RNDU);
  return Interval(rat_from_mpfr(lo.get()), rat_from_mpfr(hi.get()));
}

}  // namespace

Interval ln_enclosure(const Rat& x, int prec) {
  if (sgn(x) <= 0) throw std::domain_error("ln_enclosure: x <= 0");
  return monotone_enclosure(x, prec, [](mpfr_t r, mpfr_t a, mpfr_rnd_t rnd) {
    mpfr_log(r, a, rnd);
  });
}

Interval sqrt_enclosure(const Rat& x, int prec) {
  if (sgn(x) < 0) throw std::domain_error("sqrt_enclosure: x < 0");
  return monotone_enclosure(x, prec, [](mpfr_t r, mpfr_t a, mpfr_rnd_t rnd) {
    mpfr_sqrt(r, a, rnd);
  });
}

Interval root_enclosure(const Rat& x, unsigned long n, int prec) {
  if (sgn(x) < 0) throw std::domain_error("root_enclosure: x < 0");
  if (n == 0) throw std::domain_error("root_enclosure: n == 0");
  return monotone_enclosure(x, prec, [n](mpfr_t r, mpfr_t a, mpfr_rnd_t rnd) {
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r, a, n, rnd);
#else
    mpfr_root(r, a, n, rnd);
#endif
  });
}

Interval pow_enclosure(const Rat& base, const Rat& expo, int prec) {
  if (sgn(base) <= 0) throw std::domain_error("pow_enclosure: base <= 0");
  // Integral exponents are exact in rational arithmetic.
  if (expo.get_den() == 1 && expo.get_num().fits_slong_p()) {
    Rat v = rat_pow(base, expo.get_num().get_si());
    return Interval(v);
  }
  Mpfr b_lo(prec), b_hi(prec), e_lo(prec), e_hi(prec), r(prec);
  mpfr_set_q(b_lo.get(), base.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b_hi.get(), base.get_mpq_t(), MPFR_RNDU);
  mpfr_set_q(e_lo.get(), expo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e_hi.get(), expo.get_mpq_t(), MPFR_RNDU);
  // x^y is monotone in each argument over a positive box, so the extremes
  // sit at corners; take min/max over all four with outward rounding.
  Rat lo, hi;
  bool first = true;
  for (mpfr_ptr bp : {b_lo.get(), b_hi.get()}) {
    for (mpfr_ptr ep : {e_lo.get(), e_hi.get()}) {
      mpfr_pow(r.get(), bp, ep, MPFR_RNDD);
      Rat d = rat_from_mpfr(r.get());
      mpfr_pow(r.get(), bp, ep, MPFR_RNDU);
      Rat u = rat_from_mpfr(r.get());
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        lo = std::min(lo, d);
        hi = std::max(hi, u);
      }
    }
  }
  return Interval(lo, hi);
}

Interval sqrt_enclosure(const Interval& x, int prec) {
  return Interval(sqrt_enclosure(std::max(Rat(0), x.lo), prec).lo,
                  sqrt_enclosure(x.hi, prec).hi);
}

Interval ln_enclosure(const Interval& x, int prec) {
  return Interval(ln_enclosure(x.lo, prec).lo, ln_enclosure(x.hi, prec).hi);
}

Interval root_enclosure(const Interval& x, unsigned long n, int prec) {
  return Interval(root_enclosure(std::max(Rat(0), x.lo), n, prec).lo,
                  root_enclosure(x.hi, n, prec).hi);
}

Int binom(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return Int(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("rat_pow: 0^negative");
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r(ipow(Int(base.get_num()), a), ipow(Int(base.get_den()), a));
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

unsigned long long upow64(unsigned base, unsigned e) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > ~0ULL / base) throw std::overflow_error("upow64 overflow");
    r *= base;
  }
  return r;
}

}  // namespace ulam
