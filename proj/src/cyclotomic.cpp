#include "loewy/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "loewy/util.hpp"

namespace loewy {

namespace {

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr) {
    const std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

void add_into(std::map<Cyclotomic::Exponents, mpq_class>& m, const Cyclotomic::Exponents& key,
              const mpq_class& c) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (c != 0) m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) m.erase(it);
}

} // namespace

std::vector<Cyclotomic::Component> Cyclotomic::decompose(std::uint64_t n) {
  std::vector<Component> comps;
  for (auto [p, k] : factorize_u64(n)) {
    Component c;
    c.p = p;
    c.k = k;
    c.q = 1;
    for (std::uint64_t i = 0; i < k; ++i) c.q *= p;
    c.phi = c.q / p * (p - 1);
    comps.push_back(c);
  }
  return comps;
}

Cyclotomic::Cyclotomic(const mpq_class& r) {
  if (r != 0) terms_.emplace(Exponents{}, r);
}

void Cyclotomic::accumulate(const std::vector<Component>& comps, Exponents e, mpq_class coeff,
                            std::map<Exponents, mpq_class>& into) const {
  // rewrite the first component whose exponent escapes the power basis
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (e[i] < comps[i].phi) continue;
    const std::uint64_t step = comps[i].q / comps[i].p;  // p^(k-1)
    const std::uint32_t s = static_cast<std::uint32_t>(e[i] - comps[i].phi);
    coeff = -coeff;
    for (std::uint64_t t = 0; t + 1 < comps[i].p; ++t) {
      Exponents child = e;
      child[i] = static_cast<std::uint32_t>(s + t * step);
      accumulate(comps, std::move(child), coeff, into);
    }
    return;
  }
  add_into(into, e, coeff);
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::uint64_t e) {
  if (n == 0) throw std::invalid_argument("root_of_unity: conductor must be positive");
  e %= n;
  Cyclotomic r;
  r.comps_ = decompose(n);
  Exponents ex(r.comps_.size());
  for (std::size_t i = 0; i < r.comps_.size(); ++i) {
    const std::uint64_t q = r.comps_[i].q;
    if (q > 0xffffffffULL) throw std::invalid_argument("root_of_unity: prime-power component too large");
    ex[i] = static_cast<std::uint32_t>(mulmod_u64(e % q, inv_mod_u64((n / q) % q, q), q));
  }
  r.accumulate(r.comps_, std::move(ex), mpq_class(1), r.terms_);
  r.minimize();
  return r;
}

void Cyclotomic::minimize() {
  if (terms_.empty()) {
    comps_.clear();
    return;
  }
  for (std::size_t i = comps_.size(); i-- > 0;) {
    for (;;) {
      bool divisible = true;
      for (const auto& [e, c] : terms_)
        if (e[i] % comps_[i].p) {
          divisible = false;
          break;
        }
      if (!divisible) break;
      if (comps_[i].k == 1) {  // every exponent is zero: the component is inert
        std::map<Exponents, mpq_class> next;
        for (const auto& [e, c] : terms_) {
          Exponents f(e);
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          next.emplace(std::move(f), c);
        }
        terms_ = std::move(next);
        comps_.erase(comps_.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
      std::map<Exponents, mpq_class> next;
      for (const auto& [e, c] : terms_) {
        Exponents f(e);
        f[i] /= static_cast<std::uint32_t>(comps_[i].p);
        next.emplace(std::move(f), c);
      }
      terms_ = std::move(next);
      comps_[i].k -= 1;
      comps_[i].q /= comps_[i].p;
      comps_[i].phi /= comps_[i].p;
    }
  }
}

std::map<Cyclotomic::Exponents, mpq_class> Cyclotomic::lift_terms(
    const std::vector<Component>& target) const {
  // position and exponent multiplier of each old component inside `target`
  std::vector<std::size_t> pos(comps_.size());
  std::vector<std::uint32_t> mult(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    std::size_t j = 0;
    while (j < target.size() && target[j].p != comps_[i].p) ++j;
    if (j == target.size() || target[j].k < comps_[i].k)
      throw std::logic_error("cyclotomic: lift target is not finer");
    pos[i] = j;
    mult[i] = static_cast<std::uint32_t>(target[j].q / comps_[i].q);
  }
  std::map<Exponents, mpq_class> out;
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < comps_.size(); ++i) f[pos[i]] = e[i] * mult[i];
    out.emplace(std::move(f), c);  // e_i * mult < phi_old * mult = phi_new: still canonical
  }
  return out;
}

namespace {

std::vector<Cyclotomic::Component> merge_components(const std::vector<Cyclotomic::Component>& a,
                                                    const std::vector<Cyclotomic::Component>& b) {
  std::vector<Cyclotomic::Component> m;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].p < b[j].p))
      m.push_back(a[i++]);
    else if (i == a.size() || b[j].p < a[i].p)
      m.push_back(b[j++]);
    else {
      m.push_back(a[i].k >= b[j].k ? a[i] : b[j]);
      ++i;
      ++j;
    }
  }
  return m;
}

} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r;
  r.comps_ = merge_components(comps_, o.comps_);
  r.terms_ = lift_terms(r.comps_);
  for (const auto& [e, c] : o.lift_terms(r.comps_)) add_into(r.terms_, e, c);
  r.minimize();
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic r;
  r.comps_ = merge_components(comps_, o.comps_);
  const auto a = lift_terms(r.comps_);
  const auto b = o.lift_terms(r.comps_);
  for (const auto& [e, c] : a)
    for (const auto& [f, d] : b) {
      Exponents g(r.comps_.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(e[i]) + f[i];
        if (s >= r.comps_[i].q) s -= r.comps_[i].q;
        g[i] = static_cast<std::uint32_t>(s);
      }
      accumulate(r.comps_, std::move(g), c * d, r.terms_);
    }
  r.minimize();
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r;
  r.comps_ = comps_;
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      f[i] = e[i] ? static_cast<std::uint32_t>(comps_[i].q - e[i]) : 0;
    accumulate(r.comps_, std::move(f), c, r.terms_);
  }
  r.minimize();
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (!(comps_ == o.comps_) || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

bool Cyclotomic::is_integer() const {
  if (terms_.empty()) return true;
  if (!comps_.empty()) return false;
  return terms_.begin()->second.get_den() == 1;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is irrational");
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

std::uint64_t Cyclotomic::conductor() const {
  std::uint64_t n = 1;
  for (const auto& c : comps_) n *= c.q;
  return n;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  if (is_rational()) return terms_.begin()->second.get_str();

  const std::uint64_t n = conductor();
  std::vector<std::pair<std::uint64_t, mpq_class>> flat;  // exponent of zeta_n -> coeff
  for (const auto& [e, c] : terms_) {
    std::uint64_t exp = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      exp = (exp + static_cast<std::uint64_t>(e[i]) % comps_[i].q * ((n / comps_[i].q) % n)) % n;
    flat.emplace_back(exp, c);
  }
  std::sort(flat.begin(), flat.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string s;
  for (const auto& [exp, c] : flat) {
    const bool neg = c < 0;
    const mpq_class mag = neg ? mpq_class(-c) : c;
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    if (exp == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "z(" + std::to_string(n) + ")";
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s;
}

namespace {

struct ValueParser {
  std::string_view t;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad cyclotomic value '" + std::string(t) + "' at offset " +
                                std::to_string(i) + ": " + what);
  }
  bool peek(char c) const { return i < t.size() && t[i] == c; }
  bool take(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  std::uint64_t number() {
    if (i >= t.size() || t[i] < '0' || t[i] > '9') fail("expected a number");
    std::uint64_t v = 0;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') {
      if (v > (~0ULL - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(t[i] - '0');
      ++i;
    }
    return v;
  }
  mpq_class rational() {
    mpz_class num(static_cast<unsigned long>(number()));
    if (take('/')) {
      mpz_class den(static_cast<unsigned long>(number()));
      if (den == 0) fail("zero denominator");
      mpq_class r(num, den);
      r.canonicalize();
      return r;
    }
    return mpq_class(num);
  }
  Cyclotomic root() {
    ++i;  // 'z'
    if (!take('(')) fail("expected '(' after z");
    const std::uint64_t n = number();
    if (n == 0) fail("zero conductor");
    if (!take(')')) fail("expected ')'");
    std::uint64_t e = 1;
    if (take('^')) e = number();
    return Cyclotomic::root_of_unity(n, e);
  }
  Cyclotomic term() {
    if (peek('z')) return root();
    Cyclotomic coeff{rational()};
    if (take('*')) {
      if (!peek('z')) fail("expected z(...) after '*'");
      return coeff * root();
    }
    return coeff;
  }
  Cyclotomic value() {
    const bool neg = take('-');
    Cyclotomic acc = term();
    if (neg) acc = -acc;
    while (i < t.size()) {
      if (take('+'))
        acc = acc + term();
      else if (take('-'))
        acc = acc - term();
      else
        fail("expected '+' or '-'");
    }
    return acc;
  }
};

} // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("bad cyclotomic value: empty");
  ValueParser p{text};
  return p.value();
}

} // namespace loewy
