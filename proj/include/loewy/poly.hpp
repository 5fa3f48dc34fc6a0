#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "loewy/gf.hpp"
#include "loewy/linalg.hpp"

namespace loewy {

// Dense polynomial over a runtime field F; coefficients constant-term first,
// no trailing zeros (zero polynomial = empty vector).
template <class F>
struct Poly {
  using El = typename F::Elem;
  std::vector<El> c;
};

template <class F>
void poly_normalize(const F& f, Poly<F>& a) {
  while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
int poly_deg(const Poly<F>& a) { return static_cast<int>(a.c.size()) - 1; }

template <class F>
bool poly_is_zero(const Poly<F>& a) { return a.c.empty(); }

template <class F>
Poly<F> poly_const(const F& f, typename F::Elem v) {
  Poly<F> r;
  if (!f.is_zero(v)) r.c.push_back(v);
  return r;
}

template <class F>
Poly<F> poly_x(const F& f) { return Poly<F>{{f.zero(), f.one()}}; }

template <class F>
bool poly_eq(const Poly<F>& a, const Poly<F>& b) { return a.c == b.c; }

// total order: degree first, then coefficient vectors from the constant term
template <class F>
bool poly_less(const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  return a.c < b.c;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.add(r.c[i], b.c[i]);
  poly_normalize(f, r);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.sub(r.c[i], b.c[i]);
  poly_normalize(f, r);
  return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly<F> r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  poly_normalize(f, r);
  return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, typename F::Elem s) {
  if (f.is_zero(s)) return {};
  Poly<F> r = a;
  for (auto& x : r.c) x = f.mul(x, s);
  return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (poly_is_zero(b)) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly<F> rem = a, quo;
  const int db = poly_deg(b);
  if (poly_deg(a) < db) return {quo, rem};
  quo.c.assign(a.c.size() - b.c.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.c.back());
  for (int i = poly_deg(rem); i >= db; --i) {
    if (f.is_zero(rem.c[i])) continue;
    const auto q = f.mul(rem.c[i], lead_inv);
    quo.c[i - db] = q;
    for (int j = 0; j <= db; ++j)
      rem.c[i - db + j] = f.sub(rem.c[i - db + j], f.mul(q, b.c[j]));
  }
  poly_normalize(f, rem);
  poly_normalize(f, quo);
  return {quo, rem};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_divmod(f, a, b).second;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
  if (poly_is_zero(a)) return a;
  return poly_scale(f, a, f.inv(a.c.back()));
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!poly_is_zero(b)) {
    Poly<F> r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

template <class F>
Poly<F> poly_derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  if (a.c.size() < 2) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    typename F::Elem k = f.from_int(static_cast<std::int64_t>(i));
    r.c[i - 1] = f.mul(a.c[i], k);
  }
  poly_normalize(f, r);
  return r;
}

template <class F>
typename F::Elem poly_eval(const F& f, const Poly<F>& a, typename F::Elem x) {
  typename F::Elem acc = f.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
  return acc;
}

// a^e mod m with arbitrary-precision exponent
template <class F>
Poly<F> poly_pow_mod(const F& f, Poly<F> a, const mpz_class& e, const Poly<F>& m) {
  if (e < 0) throw std::invalid_argument("poly_pow_mod: negative exponent");
  Poly<F> r = poly_const(f, f.one());
  r = poly_mod(f, r, m);
  a = poly_mod(f, a, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = poly_mod(f, poly_mul(f, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mod(f, poly_mul(f, r, a), m);
  }
  return r;
}

// ---- irreducibility and canonical modulus selection -----------------------

// f monic of degree >= 1 over F = GF(q): irreducible iff x^(q^n) = x mod f
// and gcd(x^(q^(n/t)) - x, f) = 1 for every prime t | n.
template <class F>
bool poly_is_irreducible(const F& f, const Poly<F>& poly) {
  const int n = poly_deg(poly);
  if (n <= 0) return false;
  if (n == 1) return true;
  const mpz_class q = f.size_mpz();
  const Poly<F> x = poly_x(f);
  // x^(q^k) mod poly, built by iterating the q-power map
  auto frob_iterate = [&](int k) {
    Poly<F> h = x;
    for (int i = 0; i < k; ++i) h = poly_pow_mod(f, h, q, poly);
    return h;
  };
  Poly<F> full = frob_iterate(n);
  if (!poly_eq(full, poly_mod(f, x, poly))) return false;
  for (auto [t, e] : factorize_u64(static_cast<std::uint64_t>(n))) {
    Poly<F> h = frob_iterate(n / static_cast<int>(t));
    Poly<F> g = poly_gcd(f, poly_sub(f, h, x), poly);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// scanning coefficient vectors from the constant term upward.
inline Poly<Gfp> irreducible_polynomial(std::uint32_t p, std::uint32_t m) {
  Gfp f(p);
  if (m == 0) throw std::invalid_argument("irreducible_polynomial: degree must be positive");
  if (m == 1) return Poly<Gfp>{{0, 1}};  // x
  Poly<Gfp> cand;
  cand.c.assign(m + 1, 0);
  cand.c[m] = 1;
  for (;;) {
    if (poly_is_irreducible(f, cand)) return cand;
    // increment the low-order coefficient vector
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++cand.c[i] < p) break;
      cand.c[i] = 0;
    }
    if (i == m) throw std::runtime_error("irreducible_polynomial: search exhausted");  // unreachable
  }
}

// ---- factorization ---------------------------------------------------------

// coefficientwise p-th root of f(x) = g(x^p); over GF(p^m) the root of a
// coefficient c is c^(p^(m-1))
template <class F>
Poly<F> poly_pth_root(const F& f, const Poly<F>& a) {
  const std::uint32_t p = f.p();
  Poly<F> r;
  r.c.reserve(a.c.size() / p + 1);
  for (std::size_t i = 0; i < a.c.size(); i += p) {
    typename F::Elem c = a.c[i];
    for (std::uint32_t k = 1; k < f.degree(); ++k) c = f.frobenius(c);
    r.c.push_back(c);
  }
  poly_normalize(f, r);
  return r;
}

template <class F>
void squarefree_decompose(const F& f, const Poly<F>& in, unsigned mult,
                          std::vector<std::pair<Poly<F>, unsigned>>& out) {
  Poly<F> fp = poly_derivative(f, in);
  if (poly_is_zero(fp)) {
    squarefree_decompose(f, poly_pth_root(f, in), mult * f.p(), out);
    return;
  }
  Poly<F> c = poly_gcd(f, in, fp);
  Poly<F> w = poly_divmod(f, in, c).first;
  unsigned i = 1;
  while (poly_deg(w) > 0) {
    Poly<F> y = poly_gcd(f, w, c);
    Poly<F> z = poly_divmod(f, w, y).first;
    if (poly_deg(z) > 0) out.emplace_back(poly_monic(f, z), mult * i);
    w = std::move(y);
    c = poly_divmod(f, c, w).first;
    ++i;
  }
  if (poly_deg(c) > 0) squarefree_decompose(f, poly_pth_root(f, c), mult * f.p(), out);
}

// Split a squarefree product of irreducibles all of degree d.  The trial
// elements are enumerated deterministically (shifts x+a in field order,
// then monic quadratics), so repeated runs factor identically.
template <class F>
void equal_degree_split(const F& f, const Poly<F>& in, int d, std::vector<Poly<F>>& out) {
  const int n = poly_deg(in);
  if (n == d) {
    out.push_back(poly_monic(f, in));
    return;
  }
  const mpz_class q = f.size_mpz();
  auto try_split = [&](const Poly<F>& trial) -> Poly<F> {
    Poly<F> g;
    if (f.p() == 2) {
      // trace map over GF(2): T + T^2 + ... + T^(2^(dm-1))
      const std::uint64_t k = static_cast<std::uint64_t>(d) * f.degree();
      Poly<F> t = poly_mod(f, trial, in), s = t;
      for (std::uint64_t i = 1; i < k; ++i) {
        t = poly_mod(f, poly_mul(f, t, t), in);
        s = poly_add(f, s, t);
      }
      g = poly_gcd(f, s, in);
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      Poly<F> h = poly_pow_mod(f, trial, e, in);
      g = poly_gcd(f, poly_sub(f, h, poly_const(f, f.one())), in);
    }
    return g;
  };
  // enumerate trials: x+a, then x^2+a*x+b; bounded walk, always succeeds
  // long before exhaustion for the sizes handled here
  const std::uint64_t lim = q.fits_ulong_p() ? q.get_ui() : ~0ULL;
  for (std::uint64_t pass = 0; pass < 2; ++pass) {
    const std::uint64_t count = pass == 0 ? lim : (lim == ~0ULL ? lim : lim * lim);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly<F> trial;
      if (pass == 0) {
        trial.c = {f.nth_element(idx), f.one()};
      } else {
        trial.c = {f.nth_element(idx % lim), f.nth_element(idx / lim), f.one()};
      }
      poly_normalize(f, trial);
      if (poly_deg(trial) < 1) continue;
      Poly<F> g = try_split(trial);
      if (poly_deg(g) > 0 && poly_deg(g) < n) {
        equal_degree_split(f, g, d, out);
        equal_degree_split(f, poly_divmod(f, in, g).first, d, out);
        return;
      }
    }
  }
  throw std::runtime_error("equal_degree_split: trial set exhausted");
}

template <class F>
struct Factorization {
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, unsigned>> factors;  // monic irreducible, multiplicity
};

// Full factorization: squarefree decomposition, distinct-degree splitting,
// then derandomized equal-degree splitting.  Factors are sorted canonically.
template <class F>
Factorization<F> factor_polynomial(const F& f, const Poly<F>& in) {
  if (poly_is_zero(in)) throw std::invalid_argument("factor_polynomial: zero polynomial");
  Factorization<F> out;
  out.unit = in.c.back();
  if (poly_deg(in) == 0) return out;
  Poly<F> monic = poly_monic(f, in);
  std::vector<std::pair<Poly<F>, unsigned>> sqf;
  squarefree_decompose(f, monic, 1, sqf);
  const mpz_class q = f.size_mpz();
  for (auto& [part, mult] : sqf) {
    // distinct-degree: strip factors of degree d for d = 1, 2, ...
    Poly<F> rem = part;
    Poly<F> h = poly_mod(f, poly_x(f), rem);
    for (int d = 1; 2 * d <= poly_deg(rem); ++d) {
      h = poly_pow_mod(f, h, q, rem);
      Poly<F> g = poly_gcd(f, poly_sub(f, h, poly_x(f)), rem);
      if (poly_deg(g) > 0) {
        std::vector<Poly<F>> irr;
        equal_degree_split(f, g, d, irr);
        for (auto& fac : irr) out.factors.emplace_back(std::move(fac), mult);
        rem = poly_divmod(f, rem, g).first;
        h = poly_mod(f, h, rem);
      }
    }
    if (poly_deg(rem) > 0) out.factors.emplace_back(rem, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less<F>(a.first, b.first); });
  return out;
}

// Monic minimal polynomial of the linear map `apply` relative to the start
// vector: the least-degree monic g with g(apply)(start) = 0.  For a
// commutative unital algebra probed at its identity this is the minimal
// polynomial of the element itself.
template <class F>
Poly<F> minimal_polynomial(const F& f, std::vector<typename F::Elem> start,
                           const std::function<std::vector<typename F::Elem>(const std::vector<typename F::Elem>&)>& apply) {
  using El = typename F::Elem;
  const std::size_t n = start.size();
  // rows of reduced Krylov vectors plus their expressions in powers of the map
  std::vector<std::vector<El>> rows, exprs;
  std::vector<std::size_t> pivots;
  std::vector<El> v = std::move(start);
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<El> expr(step + 1, f.zero());
    expr[step] = f.one();
    // reduce v against stored rows
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const El coef = v[pivots[r]];
      if (f.is_zero(coef)) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(coef, rows[r][j]));
      for (std::size_t j = 0; j < exprs[r].size(); ++j)
        expr[j] = f.sub(expr[j], f.mul(coef, exprs[r][j]));
    }
    std::size_t piv = 0;
    while (piv < n && f.is_zero(v[piv])) ++piv;
    if (piv == n) {
      Poly<F> g{std::move(expr)};
      poly_normalize(f, g);
      return g;  // leading coefficient is 1 by construction
    }
    const El ipv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, ipv);
    for (auto& x : expr) x = f.mul(x, ipv);
    rows.push_back(v);
    exprs.push_back(std::move(expr));
    pivots.push_back(piv);
    v = apply(rows.back());
  }
  throw std::runtime_error("minimal_polynomial: no dependency found");  // unreachable
}

template <class F>
std::string poly_to_string(const F& f, const Poly<F>& a) {
  if (poly_is_zero(a)) return "0";
  std::string s;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (f.is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || !f.is_one(a.c[i])) s += f.to_string(a.c[i]);
    if (i > 0) {
      if (!f.is_one(a.c[i])) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

} // namespace loewy
