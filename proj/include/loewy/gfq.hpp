#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewy/gf.hpp"
#include "loewy/poly.hpp"

namespace loewy {

// GF(p^m) with a fixed monic modulus; by default the lexicographically
// smallest irreducible of degree m over GF(p), so that two fields with the
// same (p, m) are literally the same field.  Elements are coefficient
// vectors of length m, constant term first.
class Gfq {
public:
  using Elem = std::vector<std::uint32_t>;

  Gfq(std::uint32_t p, std::uint32_t m) : base_(p), m_(m) {
    if (m == 0) throw std::invalid_argument("Gfq: extension degree must be positive");
    Poly<Gfp> mod = (m == 1) ? Poly<Gfp>{{0, 1}} : irreducible_polynomial(p, m);
    modulus_ = mod.c;  // length m+1, monic
    if (m == 1) modulus_ = {0, 1};
  }

  Gfq(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
      : base_(p), m_(m), modulus_(std::move(modulus)) {
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
      throw std::invalid_argument("Gfq: modulus must be monic of degree m");
  }

  std::uint32_t p() const { return base_.p(); }
  std::uint32_t degree() const { return m_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const Gfp& base() const { return base_; }

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (s > (~0ULL) / p()) return ~0ULL;  // saturate
      s *= p();
    }
    return s;
  }
  mpz_class size_mpz() const {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), p(), m_);
    return s;
  }

  Elem zero() const { return Elem(m_, 0); }
  Elem one() const {
    Elem e(m_, 0);
    e[0] = base_.one();
    return e;
  }
  // the class of x; a basis generator of the extension (m >= 2)
  Elem gen() const {
    Elem e(m_, 0);
    if (m_ == 1) { e[0] = base_.one(); return e; }
    e[1] = 1;
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (auto c : a) if (c) return false;
    return true;
  }
  bool is_one(const Elem& a) const {
    if (a[0] != base_.one()) return false;
    for (std::size_t i = 1; i < a.size(); ++i) if (a[i]) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (m_ == 1) return Elem{base_.mul(a[0], b[0])};
    std::vector<std::uint32_t> t(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (!a[i]) continue;
      for (std::uint32_t j = 0; j < m_; ++j)
        t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
    }
    // reduce by the monic modulus
    for (std::size_t i = t.size(); i-- > m_;) {
      const std::uint32_t c = t[i];
      if (!c) continue;
      t[i] = 0;
      for (std::uint32_t j = 0; j < m_; ++j)
        t[i - m_ + j] = base_.sub(t[i - m_ + j], base_.mul(c, modulus_[j]));
    }
    t.resize(m_);
    return t;
  }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("Gfq: inverse of zero");
    if (m_ == 1) return Elem{base_.inv(a[0])};
    // extended Euclid in GF(p)[x] against the modulus
    Poly<Gfp> r0{std::vector<std::uint32_t>(modulus_)}, r1{std::vector<std::uint32_t>(a)};
    poly_normalize(base_, r1);
    Poly<Gfp> s0, s1 = poly_const(base_, base_.one());
    while (poly_deg(r1) > 0) {
      auto [q, r] = poly_divmod(base_, r0, r1);
      Poly<Gfp> s = poly_sub(base_, s0, poly_mul(base_, q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (poly_is_zero(r1)) throw std::domain_error("Gfq: element not invertible");
    Poly<Gfp> res = poly_scale(base_, s1, base_.inv(r1.c[0]));
    Elem out(m_, 0);
    for (std::size_t i = 0; i < res.c.size(); ++i) out[i] = res.c[i];
    return out;
  }

  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = one();
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
  }

  // x -> x^p, the GF(p)-linear field automorphism generating the Galois group
  Elem frobenius(const Elem& a) const { return pow(a, mpz_class(p())); }

  Elem from_int(std::int64_t v) const {
    Elem e(m_, 0);
    e[0] = base_.from_int(v);
    return e;
  }
  Elem from_mpz(const mpz_class& v) const {
    Elem e(m_, 0);
    e[0] = base_.from_mpz(v);
    return e;
  }
  Elem embed_base(Gfp::Elem v) const {
    Elem e(m_, 0);
    e[0] = v;
    return e;
  }

  // canonical enumeration by base-p digits, constant coefficient fastest
  Elem nth_element(std::uint64_t i) const {
    Elem e(m_, 0);
    for (std::uint32_t k = 0; k < m_ && i; ++k) {
      e[k] = static_cast<std::uint32_t>(i % p());
      i /= p();
    }
    return e;
  }

  std::string to_string(const Elem& a) const {
    if (m_ == 1) return std::to_string(a[0]);
    std::string s = "[";
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + "]";
  }

  FieldDescriptor descriptor() const { return FieldDescriptor{p(), m_, modulus_}; }

  bool operator==(const Gfq& o) const {
    return p() == o.p() && m_ == o.m_ && modulus_ == o.modulus_;
  }

private:
  Gfp base_;
  std::uint32_t m_;
  std::vector<std::uint32_t> modulus_;
};

} // namespace loewy
