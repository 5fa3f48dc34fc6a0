#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace loewy {

// Exact element of a cyclotomic field, kept in a canonical sparse form.
//
// The conductor n = q_1 * ... * q_s factors into prime powers q_i = p_i^k_i,
// and Q(zeta_n) is the tensor product of the fields Q(zeta_{q_i}).  A value is
// stored as a rational combination of products  prod_i zeta_{q_i}^{e_i}  with
// each exponent in the power-basis range 0 <= e_i < phi(q_i); zeta_n^e splits
// into components e_i = e * ((n/q_i)^-1 mod q_i) mod q_i.  Exponents at or
// above phi(q_i) are rewritten with
//   zeta^{phi(q) + s} = -(zeta^s + zeta^{s + p^{k-1}} + ... + zeta^{s + (p-2) p^{k-1}}),
// the relation Phi_q(zeta) = 0.  The conductor is always minimal: a prime
// power component whose exponents are all divisible by p is lowered or
// dropped.  Two values are equal iff their representations are equal.
class Cyclotomic {
public:
  struct Component {
    std::uint64_t p = 0, k = 0, q = 0, phi = 0;  // q = p^k, phi = (p-1) p^(k-1)
    bool operator==(const Component&) const = default;
  };
  using Exponents = std::vector<std::uint32_t>;

  Cyclotomic() = default;  // zero
  explicit Cyclotomic(const mpq_class& r);
  explicit Cyclotomic(long v) : Cyclotomic(mpq_class(v)) {}

  // coefficient-1 root zeta_n^e
  static Cyclotomic root_of_unity(std::uint64_t n, std::uint64_t e);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return comps_.empty(); }
  bool is_integer() const;
  mpq_class rational_value() const;  // throws unless is_rational()
  std::uint64_t conductor() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic conj() const;  // complex conjugation, zeta -> zeta^-1

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // compact value syntax used in table files, e.g. "-1+2*z(5)^3"; no whitespace
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  const std::vector<Component>& components() const { return comps_; }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }

private:
  std::vector<Component> comps_;          // ascending primes
  std::map<Exponents, mpq_class> terms_;  // canonical exponents -> nonzero coefficient

  // accumulates coeff * prod zeta^{e_i} where e_i may be anywhere in [0, q_i)
  void accumulate(const std::vector<Component>& comps, Exponents e, mpq_class coeff,
                  std::map<Exponents, mpq_class>& into) const;
  void minimize();
  static std::vector<Component> decompose(std::uint64_t n);
  // rewrites this value on a finer component list (every prime of comps_
  // appears in `target` with at least the same k)
  std::map<Exponents, mpq_class> lift_terms(const std::vector<Component>& target) const;
};

} // namespace loewy
