#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewy/util.hpp"

namespace loewy {

// Description of a finite field GF(p^m): characteristic, extension degree and
// the monic modulus polynomial (coefficients mod p, constant term first,
// length m+1).  For m = 1 the modulus is x.
struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldDescriptor&) const = default;
};

// GF(p), elements are plain residues in [0, p).
class Gfp {
public:
  using Elem = std::uint32_t;

  explicit Gfp(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("Gfp: characteristic must be prime, got " + std::to_string(p));
    if (p >= (1u << 31)) throw std::invalid_argument("Gfp: characteristic too large");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return 1; }
  // number of elements, as long as it fits; used for enumeration bounds
  std::uint64_t size() const { return p_; }
  mpz_class size_mpz() const { return mpz_class(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1 % p_; }

  Elem add(Elem a, Elem b) const { std::uint64_t s = std::uint64_t(a) + b; return s >= p_ ? Elem(s - p_) : Elem(s); }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p_); }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("Gfp: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return Elem(t);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return Elem(r);
  }
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Elem(r.get_ui());
  }

  // x -> x^p is the identity here; kept for interface parity with Gfq
  Elem frobenius(Elem a) const { return a; }

  // canonical enumeration: 0, 1, ..., p-1
  Elem nth_element(std::uint64_t i) const { return Elem(i % p_); }

  std::string to_string(Elem a) const { return std::to_string(a); }

  FieldDescriptor descriptor() const { return FieldDescriptor{p_, 1, {0, 1}}; }

  bool operator==(const Gfp& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

} // namespace loewy
