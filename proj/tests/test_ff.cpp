#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loewy/gf.hpp"
#include "loewy/gfq.hpp"
#include "loewy/linalg.hpp"
#include "loewy/poly.hpp"
#include "loewy/util.hpp"

using namespace loewy;

namespace {

// exhaustive pairs, sampled triples when the field is large
template <class F>
void check_field_axioms(const F& f) {
  const std::uint64_t q = f.size();
  REQUIRE(q <= 4096);
  std::vector<typename F::Elem> elems;
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(f.nth_element(i));

  for (const auto& a : elems) {
    CHECK(f.add(a, f.zero()) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.is_zero(f.add(a, f.neg(a))));
    if (!f.is_zero(a)) CHECK(f.is_one(f.mul(a, f.inv(a))));
  }
  for (const auto& a : elems)
    for (const auto& b : elems) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      // Frobenius is additive: (a+b)^p = a^p + b^p
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  SplitMix64 rng(0x5eedULL + q);
  const std::uint64_t triples = q <= 16 ? q * q * q : 4000;
  for (std::uint64_t t = 0; t < triples; ++t) {
    const auto& a = elems[q <= 16 ? t / (q * q) : rng.below(q)];
    const auto& b = elems[q <= 16 ? (t / q) % q : rng.below(q)];
    const auto& c = elems[q <= 16 ? t % q : rng.below(q)];
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

} // namespace

TEST_CASE("field axioms on the stock test fields") {
  check_field_axioms(Gfp(2));
  check_field_axioms(Gfp(3));
  check_field_axioms(Gfp(5));
  check_field_axioms(Gfp(11));
  check_field_axioms(Gfq(2, 3));
  check_field_axioms(Gfq(3, 2));
  check_field_axioms(Gfq(5, 2));
}

TEST_CASE("canonical irreducible moduli") {
  // hand-checked smallest monic irreducibles, constant term first
  CHECK(irreducible_polynomial(2, 1).c == std::vector<std::uint32_t>{0, 1});
  CHECK(irreducible_polynomial(2, 3).c == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK(irreducible_polynomial(3, 2).c == std::vector<std::uint32_t>{1, 0, 1});     // x^2+1
  CHECK(irreducible_polynomial(2, 2).c == std::vector<std::uint32_t>{1, 1, 1});     // x^2+x+1
  CHECK(irreducible_polynomial(5, 2).c == std::vector<std::uint32_t>{2, 0, 1});     // x^2+2
  CHECK(irreducible_polynomial(3, 3).c == std::vector<std::uint32_t>{1, 2, 0, 1});  // x^3+2x+1

  for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 8}, {3, 5}, {5, 4}, {7, 3}, {11, 2}}) {
    Gfp f(p);
    auto g = irreducible_polynomial(p, m);
    CHECK(poly_deg(g) == static_cast<int>(m));
    CHECK(poly_is_irreducible(f, g));
  }
}

TEST_CASE("extension field modulus relations") {
  Gfq f4(2, 2);  // w^2 = w + 1
  auto w = f4.gen();
  CHECK(f4.mul(w, w) == f4.add(w, f4.one()));

  Gfq f9(3, 2);  // modulus x^2+1, so w^2 = -1
  auto w9 = f9.gen();
  CHECK(f9.mul(w9, w9) == f9.neg(f9.one()));

  // x^(p^m) = x in GF(p^m)
  Gfq f125(5, 3);
  auto a = f125.nth_element(97);
  auto b = a;
  for (int i = 0; i < 3; ++i) b = f125.frobenius(b);
  CHECK(b == a);
}

TEST_CASE("rref and kernel, hand example over GF(5)") {
  Gfp f(5);
  Mat<Gfp> M(f, 2, 3);
  M.at(0, 0) = 1; M.at(0, 1) = 2; M.at(0, 2) = 0;
  M.at(1, 0) = 2; M.at(1, 1) = 4; M.at(1, 2) = 0;
  auto rk = rref_kernel(f, M);
  CHECK(rk.rank == 1);
  REQUIRE(rk.rref.rows == 1);
  CHECK(rk.rref.at(0, 0) == 1);
  CHECK(rk.rref.at(0, 1) == 2);
  CHECK(rk.rref.at(0, 2) == 0);
  REQUIRE(rk.kernel.rows == 2);
  // canonical kernel basis: one vector per free column
  CHECK(rk.kernel.at(0, 0) == 3);  // -2 mod 5
  CHECK(rk.kernel.at(0, 1) == 1);
  CHECK(rk.kernel.at(0, 2) == 0);
  CHECK(rk.kernel.at(1, 0) == 0);
  CHECK(rk.kernel.at(1, 1) == 0);
  CHECK(rk.kernel.at(1, 2) == 1);
}

TEST_CASE("rref properties on random matrices") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t ps[] = {2, 3, 5, 7};
    Gfp f(ps[trial % 4]);
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    Mat<Gfp> M(f, r, c);
    for (auto& x : M.a) x = f.from_int(static_cast<std::int64_t>(rng.below(f.p())));
    auto rk = rref_kernel(f, M);
    CHECK(rk.rank + rk.kernel.rows == c);
    // M * v = 0 for kernel rows
    for (std::size_t kr = 0; kr < rk.kernel.rows; ++kr)
      for (std::size_t i = 0; i < r; ++i) {
        auto acc = f.zero();
        for (std::size_t j = 0; j < c; ++j) acc = f.add(acc, f.mul(M.at(i, j), rk.kernel.at(kr, j)));
        CHECK(f.is_zero(acc));
      }
    // rref is idempotent
    Mat<Gfp> R = rk.rref;
    auto again = rref_kernel(f, R);
    CHECK(again.rank == rk.rank);
    CHECK(again.rref.a == rk.rref.a);
  }
}

TEST_CASE("polynomial factorization, fixed cases") {
  Gfp f2(2);
  // x^2 + 1 = (x+1)^2 over GF(2)
  auto fac = factor_polynomial(f2, Poly<Gfp>{{1, 0, 1}});
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first.c == std::vector<std::uint32_t>{1, 1});
  CHECK(fac.factors[0].second == 2);

  Gfp f5(5);
  // x^2 + 1 = (x+2)(x+3) over GF(5)
  auto fac5 = factor_polynomial(f5, Poly<Gfp>{{1, 0, 1}});
  REQUIRE(fac5.factors.size() == 2);
  CHECK(fac5.factors[0].first.c == std::vector<std::uint32_t>{2, 1});
  CHECK(fac5.factors[1].first.c == std::vector<std::uint32_t>{3, 1});

  Gfp f3(3);
  // x^9 - x = product of all monic irreducibles of degree dividing 2... restricted:
  // x^3 - x = x(x+1)(x+2) over GF(3)
  auto fac3 = factor_polynomial(f3, Poly<Gfp>{{0, 2, 0, 1}});
  REQUIRE(fac3.factors.size() == 3);
  CHECK(fac3.factors[0].first.c == std::vector<std::uint32_t>{0, 1});
  CHECK(fac3.factors[1].first.c == std::vector<std::uint32_t>{1, 1});
  CHECK(fac3.factors[2].first.c == std::vector<std::uint32_t>{2, 1});
}

namespace {

template <class F>
void roundtrip_factor(const F& f, SplitMix64& rng, int deg) {
  Poly<F> a;
  for (int i = 0; i <= deg; ++i) a.c.push_back(f.nth_element(rng.below(f.size())));
  poly_normalize(f, a);
  if (poly_deg(a) < 1) return;
  auto fac = factor_polynomial(f, a);
  Poly<F> prod = poly_const(f, fac.unit);
  for (auto& [g, e] : fac.factors) {
    CHECK(poly_is_irreducible(f, g));
    CHECK(g.c.back() == f.one());
    for (unsigned k = 0; k < e; ++k) prod = poly_mul(f, prod, g);
  }
  CHECK(poly_eq(prod, a));
}

} // namespace

TEST_CASE("factorization round-trips on random polynomials") {
  SplitMix64 rng(7);
  Gfp f2(2), f3(3), f7(7);
  Gfq f4(2, 2), f9(3, 2);
  for (int t = 0; t < 25; ++t) {
    roundtrip_factor(f2, rng, 1 + static_cast<int>(rng.below(9)));
    roundtrip_factor(f3, rng, 1 + static_cast<int>(rng.below(8)));
    roundtrip_factor(f7, rng, 1 + static_cast<int>(rng.below(6)));
    roundtrip_factor(f4, rng, 1 + static_cast<int>(rng.below(6)));
    roundtrip_factor(f9, rng, 1 + static_cast<int>(rng.below(5)));
  }
}

TEST_CASE("minimal polynomial of simple operators") {
  Gfp f(3);
  // nilpotent shift on 4 coordinates: min poly x^4 relative to e0
  auto shift = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> w(v.size(), 0);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) w[i + 1] = v[i];
    return w;
  };
  std::vector<std::uint32_t> e0 = {1, 0, 0, 0};
  auto mp = minimal_polynomial<Gfp>(f, e0, shift);
  CHECK(mp.c == std::vector<std::uint32_t>{0, 0, 0, 0, 1});

  // identity: x - 1
  auto ident = [](const std::vector<std::uint32_t>& v) { return v; };
  auto mp2 = minimal_polynomial<Gfp>(f, e0, ident);
  CHECK(mp2.c == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("poly_pow_mod with prime-power exponents") {
  Gfp f(5);
  auto mod = irreducible_polynomial(5, 3);
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), 5, 3);
  auto r = poly_pow_mod(f, poly_x(f), e, mod);
  CHECK(poly_eq(r, poly_x(f)));  // Frobenius fixed point of the full field
}
