#include "ulam/codes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ulam {

bool is_prime_power(int q, int* p_out, int* e_out) {
  if (q < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q prime
  int e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

namespace {

// polynomials over F_p as coefficient vectors, lowest degree first
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m monic
  while (a.size() >= m.size()) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_divisible(const std::vector<int>& a, const std::vector<int>& d, int p) {
  std::vector<int> r = poly_mod(a, d, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

// encode/decode polynomials of degree < e as integers base p
std::vector<int> decode_poly(int v, int p, int e) {
  std::vector<int> c(e);
  for (int i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

// monic irreducible of degree e over F_p, found by trial division
std::vector<int> find_irreducible(int p, int e) {
  if (e == 1) return {0, 1};  // x
  for (int low = 0; low < int(ipow(Int(p), e).get_ui()); ++low) {
    std::vector<int> poly = decode_poly(low, p, e);
    poly.push_back(1);  // monic of degree e
    bool irreducible = true;
    // a proper factor implies a monic factor of degree <= e/2
    for (int d = 1; d <= e / 2 && irreducible; ++d) {
      int nd = int(ipow(Int(p), d).get_ui());
      for (int dv = 0; dv < nd; ++dv) {
        std::vector<int> div = decode_poly(dv, p, d);
        div.push_back(1);
        if (poly_divisible(poly, div, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return poly;
  }
  throw std::logic_error("find_irreducible: none found");
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  if (!is_prime_power(q, &p_, &e_))
    throw std::invalid_argument("GaloisField: order is not a prime power");
  std::vector<int> modulus = find_irreducible(p_, e_);
  add_.assign(q, std::vector<int>(q));
  mul_.assign(q, std::vector<int>(q));
  neg_.assign(q, 0);
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + (i < int(c.size()) ? c[i] : 0);
    return v;
  };
  for (int x = 0; x < q; ++x) {
    std::vector<int> cx = decode_poly(x, p_, e_);
    {
      std::vector<int> cn(e_);
      for (int i = 0; i < e_; ++i) cn[i] = (p_ - cx[i]) % p_;
      neg_[x] = encode(cn);
    }
    for (int y = 0; y < q; ++y) {
      std::vector<int> cy = decode_poly(y, p_, e_);
      std::vector<int> sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (cx[i] + cy[i]) % p_;
      add_[x][y] = encode(sum);
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p_;
      mul_[x][y] = encode(poly_mod(prod, modulus, p_));
    }
  }
}

namespace {

int word_distance_idx(std::uint64_t a, std::uint64_t b, int t, int q) {
  int d = 0;
  for (int i = 0; i < q; ++i) {
    if (a % t != b % t) ++d;
    a /= t;
    b /= t;
  }
  return d;
}

// verify min pairwise distance of a materialized code
int verify_distance(const std::vector<Word>& words, int t, int q) {
  if (words.size() < 2) return q + 1;
  int best = q + 1;
  std::vector<std::uint64_t> idx;
  idx.reserve(words.size());
  for (const Word& w : words) idx.push_back(w.index(t));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      best = std::min(best, word_distance_idx(idx[i], idx[j], t, q));
  return best;
}

CodeResult linear_varshamov(int t, int q, int radius, std::uint64_t cap) {
  const int d = 2 * radius + 1;
  GaloisField gf(t);
  // m = ceil(log_t(1 + sum_{i<=2R-1} C(q-1,i)(t-1)^i))
  Int bound = 1;
  for (int i = 0; i <= 2 * radius - 1; ++i)
    bound += binom(q - 1, i) * ipow(Int(t - 1), i);
  int m = 0;
  Int power = 1;
  while (power < bound) {
    power *= t;
    ++m;
  }
  if (m > q) m = q;

  std::uint64_t space = upow64(t, m);
  std::vector<std::vector<int>> columns;  // each of length m
  auto decode_col = [&](std::uint64_t v) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) {
      c[i] = int(v % t);
      v /= t;
    }
    return c;
  };
  // forbidden = all linear combinations of <= d-2 chosen columns
  std::vector<bool> forbidden(space, false);
  forbidden[0] = true;
  auto mark_combos = [&]() {
    std::fill(forbidden.begin(), forbidden.end(), false);
    forbidden[0] = true;
    int limit = d - 2;
    std::function<void(std::size_t, int, std::vector<int>&)> rec =
        [&](std::size_t from, int left, std::vector<int>& acc) {
          {
            std::uint64_t enc = 0;
            for (int i = m - 1; i >= 0; --i) enc = enc * t + acc[i];
            forbidden[enc] = true;
          }
          if (left == 0) return;
          for (std::size_t ci = from; ci < columns.size(); ++ci) {
            for (int coef = 1; coef < t; ++coef) {
              std::vector<int> nxt = acc;
              for (int i = 0; i < m; ++i)
                nxt[i] = gf.add(nxt[i], gf.mul(coef, columns[ci][i]));
              rec(ci + 1, left - 1, nxt);
            }
          }
        };
    std::vector<int> zero(m, 0);
    rec(0, limit, zero);
  };
  for (int col = 0; col < q; ++col) {
    mark_combos();
    std::uint64_t pick = 0;
    while (pick < space && forbidden[pick]) ++pick;
    if (pick == space)
      throw std::logic_error("linear_varshamov: no admissible column (bound violated)");
    columns.push_back(decode_col(pick));
  }

  // null space of H: reduce H (m x q) and read off the free variables
  std::vector<std::vector<int>> h(m, std::vector<int>(q));
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < m; ++i) h[i][j] = columns[j][i];
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < q && row < m; ++col) {
    int sel = -1;
    for (int r = row; r < m; ++r)
      if (h[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(h[sel], h[row]);
    // scale to 1
    int inv = 0;
    for (int v = 0; v < t; ++v)
      if (gf.mul(h[row][col], v) == 1) {
        inv = v;
        break;
      }
    for (int j = 0; j < q; ++j) h[row][j] = gf.mul(h[row][j], inv);
    for (int r = 0; r < m; ++r) {
      if (r == row || h[r][col] == 0) continue;
      int f = h[r][col];
      for (int j = 0; j < q; ++j)
        h[r][j] = gf.sub(h[r][j], gf.mul(f, h[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  int rank = row;
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(q, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < q; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  CodeResult out;
  out.length = q;
  out.claimed_distance = d;
  Int size = ipow(Int(t), free_cols.size());
  if (!size.fits_slong_p()) throw CapExceeded("varshamov_code: code too large");
  out.size = size.get_si();
  std::uint64_t nwords = std::uint64_t(out.size);
  if (nwords > cap) throw CapExceeded("varshamov_code: materialization cap");
  // enumerate assignments of free variables, back-substitute pivots
  out.words.reserve(nwords);
  std::vector<int> x(q, 0);
  for (std::uint64_t a = 0; a < nwords; ++a) {
    std::uint64_t v = a;
    std::fill(x.begin(), x.end(), 0);
    for (int fc : free_cols) {
      x[fc] = int(v % t);
      v /= t;
    }
    for (int r = rank - 1; r >= 0; --r) {
      int pc = pivot_col[r];
      int acc = 0;
      for (int j = pc + 1; j < q; ++j) acc = gf.add(acc, gf.mul(h[r][j], x[j]));
      x[pc] = gf.neg(acc);
    }
    Word w;
    for (int j = 0; j < q; ++j) w.push_back(x[j]);
    out.words.push_back(w);
  }
  out.materialized = true;
  std::sort(out.words.begin(), out.words.end());
  if (out.words.size() <= 4000) {
    out.verified_distance = verify_distance(out.words, t, q);
  } else {
    // linear code: min distance = min weight, checked over every codeword
    int best = q + 1;
    for (const Word& w : out.words) {
      int weight = 0;
      for (int i = 0; i < q; ++i) weight += (w[i] != 0);
      if (weight > 0) best = std::min(best, weight);
    }
    out.verified_distance = best;
  }
  if (out.verified_distance < d)
    throw std::logic_error("varshamov_code: constructed distance below target");
  return out;
}

}  // namespace

CodeResult varshamov_code(int t, int q, int radius, std::uint64_t cap) {
  if (t < 2 || q < 0 || radius < 0)
    throw std::invalid_argument("varshamov_code: bad parameters");
  CodeResult out;
  if (q == 0) {
    out.size = 1;
    out.length = 0;
    out.claimed_distance = 2 * radius + 1;
    out.verified_distance = 1;  // vacuous
    out.materialized = true;
    out.words.push_back(Word{});
    return out;
  }
  if (radius == 0) {
    // distance 1: the whole space
    out.length = q;
    out.claimed_distance = 1;
    out.verified_distance = 1;
    Int size = ipow(Int(t), q);
    if (!size.fits_slong_p()) throw CapExceeded("varshamov_code: t^Q too large");
    out.size = size.get_si();
    if (std::uint64_t(out.size) <= cap) {
      out.materialized = true;
      for (std::uint64_t i = 0; i < std::uint64_t(out.size); ++i)
        out.words.push_back(Word::from_index(i, q, t));
    }
    return out;
  }
  if (2 * radius + 1 > q) {
    // only one codeword can exist at this distance
    out.length = q;
    out.claimed_distance = 2 * radius + 1;
    out.verified_distance = q + 1;
    out.size = 1;
    out.materialized = true;
    out.words.push_back(Word::from_index(0, q, t));
    return out;
  }
  if (is_prime_power(t)) return linear_varshamov(t, q, radius, cap);

  // composite alphabet: best translate of the next-prime-power code
  int t2 = t + 1;
  while (!is_prime_power(t2)) ++t2;
  CodeResult base = varshamov_code(t2, q, radius, cap);
  if (!base.materialized)
    throw CapExceeded("varshamov_code: base code not materialized");
  std::uint64_t translates = upow64(t2, q);
  if (translates > cap)
    throw CapExceeded("varshamov_code: translate search cap");
  std::vector<Word> best;
  for (std::uint64_t wi = 0; wi < translates; ++wi) {
    Word shift = Word::from_index(wi, q, t2);
    std::vector<Word> cur;
    for (const Word& cw : base.words) {
      Word s;
      bool inside = true;
      for (int i = 0; i < q; ++i) {
        int v = (cw[i] + shift[i]) % t2;
        if (v >= t) {
          inside = false;
          break;
        }
        s.push_back(v);
      }
      if (inside) cur.push_back(s);
    }
    if (cur.size() > best.size()) best = std::move(cur);
  }
  out.length = q;
  out.claimed_distance = 2 * radius + 1;
  out.size = static_cast<long long>(best.size());
  out.words = std::move(best);
  std::sort(out.words.begin(), out.words.end());
  out.materialized = true;
  out.verified_distance = verify_distance(out.words, t, q);
  if (out.size > 1 && out.verified_distance < out.claimed_distance)
    throw std::logic_error("varshamov_code: translate distance below target");
  return out;
}

long long exact_max_code_size(int t, int q, int d, std::uint64_t cap) {
  std::uint64_t total = upow64(t, q);
  if (total > cap) throw CapExceeded("exact_max_code_size: space too large");
  // distance graph, greedy branch and bound over lexicographic codewords
  std::vector<std::vector<bool>> ok(total, std::vector<bool>(total, false));
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = a + 1; b < total; ++b)
      if (word_distance_idx(a, b, t, q) >= d) ok[a][b] = ok[b][a] = true;
  long long best = 0;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t from) {
    best = std::max(best, static_cast<long long>(chosen.size()));
    for (std::uint64_t v = from; v < total; ++v) {
      if (static_cast<long long>(chosen.size() + (total - v)) <= best) break;
      bool fits = true;
      for (std::uint64_t u : chosen)
        if (!ok[u][v]) {
          fits = false;
          break;
        }
      if (fits) {
        chosen.push_back(v);
        rec(v + 1);
        chosen.pop_back();
      }
    }
  };
  rec(0);
  return best;
}

}  // namespace ulam
