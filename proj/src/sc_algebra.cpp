#include "loewy/sc_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "loewy/util.hpp"

namespace loewy {

namespace {

// accumulators are reduced lazily: one product is < 2^62, so reducing
// whenever the running sum passes 2^63 keeps every addition overflow-free
constexpr std::uint64_t kLazyCap = 1ull << 63;

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace

SCAlgebra::SCAlgebra(Gfq field, std::size_t dim, std::vector<Gfq::Elem> constants,
                     Vec unit, std::vector<std::string> labels)
    : field_(std::move(field)), dim_(dim), sc_(std::move(constants)),
      unit_(std::move(unit)), labels_(std::move(labels)) {
  if (dim_ == 0) throw std::invalid_argument("SCAlgebra: dimension must be positive");
  if (sc_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("SCAlgebra: expected dim^3 structure constants, got " +
                                std::to_string(sc_.size()));
  if (unit_.size() != dim_)
    throw std::invalid_argument("SCAlgebra: unit vector has length " +
                                std::to_string(unit_.size()) + ", expected " +
                                std::to_string(dim_));
  if (!labels_.empty() && labels_.size() != dim_)
    throw std::invalid_argument("SCAlgebra: label count differs from the dimension");
  const std::uint32_t m = field_.degree();
  const std::uint32_t p = field_.p();
  auto check_elem = [&](const Gfq::Elem& c) {
    if (c.size() != m) throw std::invalid_argument("SCAlgebra: field element of the wrong degree");
    for (auto x : c)
      if (x >= p) throw std::invalid_argument("SCAlgebra: field element coordinate out of range");
  };
  for (const auto& c : sc_) check_elem(c);
  for (const auto& c : unit_) check_elem(c);

  bool prime = true;
  for (const auto& c : sc_) {
    for (std::size_t t = 1; t < c.size(); ++t)
      if (c[t]) { prime = false; break; }
    if (!prime) break;
  }
  if (prime) {
    flat_.resize(sc_.size());
    for (std::size_t i = 0; i < sc_.size(); ++i) flat_[i] = sc_[i][0];
  }
  validate();
}

SCAlgebra::Vec SCAlgebra::zero_vec() const { return Vec(dim_, field_.zero()); }

SCAlgebra::Vec SCAlgebra::basis_vec(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("SCAlgebra::basis_vec: index out of range");
  Vec v(dim_, field_.zero());
  v[i] = field_.one();
  return v;
}

bool SCAlgebra::vec_is_zero(const Vec& x) const {
  for (const auto& c : x)
    if (!field_.is_zero(c)) return false;
  return true;
}

bool SCAlgebra::vec_equal(const Vec& x, const Vec& y) const { return x == y; }

SCAlgebra::Vec SCAlgebra::vec_add(const Vec& x, const Vec& y) const {
  Vec z(dim_);
  for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.add(x[i], y[i]);
  return z;
}

SCAlgebra::Vec SCAlgebra::vec_sub(const Vec& x, const Vec& y) const {
  Vec z(dim_);
  for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.sub(x[i], y[i]);
  return z;
}

SCAlgebra::Vec SCAlgebra::vec_scale(const Gfq::Elem& c, const Vec& x) const {
  Vec z(dim_);
  for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.mul(c, x[i]);
  return z;
}

SCAlgebra::Vec SCAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("SCAlgebra::mul: vector of the wrong length");
  const std::uint32_t m = field_.degree();
  const std::uint64_t p = field_.p();
  if (!flat_.empty() && m == 1) {
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::uint64_t xi = x[i][0];
      if (!xi) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const std::uint64_t yj = y[j][0];
        if (!yj) continue;
        const std::uint64_t pr = xi * yj % p;
        if (!pr) continue;
        const std::uint32_t* c = &flat_[(i * dim_ + j) * dim_];
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!c[k]) continue;
          acc[k] += pr * c[k];
          if (acc[k] >= kLazyCap) acc[k] %= p;
        }
      }
    }
    Vec z(dim_);
    for (std::size_t k = 0; k < dim_; ++k) z[k] = Gfq::Elem{std::uint32_t(acc[k] % p)};
    return z;
  }
  if (!flat_.empty()) {
    // constants are prime-field scalars: accumulate coordinate-wise
    std::vector<std::uint64_t> acc(dim_ * m, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(y[j])) continue;
        const Gfq::Elem pr = field_.mul(x[i], y[j]);
        const std::uint32_t* c = &flat_[(i * dim_ + j) * dim_];
        for (std::size_t k = 0; k < dim_; ++k) {
          const std::uint64_t ck = c[k];
          if (!ck) continue;
          std::uint64_t* row = &acc[k * m];
          for (std::uint32_t t = 0; t < m; ++t) {
            row[t] += ck * pr[t];
            if (row[t] >= kLazyCap) row[t] %= p;
          }
        }
      }
    }
    Vec z(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      Gfq::Elem e(m);
      for (std::uint32_t t = 0; t < m; ++t) e[t] = std::uint32_t(acc[k * m + t] % p);
      z[k] = std::move(e);
    }
    return z;
  }
  Vec z = zero_vec();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(y[j])) continue;
      const Gfq::Elem pr = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Gfq::Elem& s = sc(i, j, k);
        if (field_.is_zero(s)) continue;
        z[k] = field_.add(z[k], field_.mul(pr, s));
      }
    }
  }
  return z;
}

SCAlgebra::Vec SCAlgebra::pow(Vec x, const mpz_class& e) const {
  if (e < 1) throw std::domain_error("SCAlgebra::pow: exponent must be positive");
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  Vec r = x;
  for (std::size_t b = bits - 1; b-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), b)) r = mul(r, x);
  }
  return r;
}

void SCAlgebra::validate() const {
  const std::size_t d = dim_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (sc(i, j, k) != sc(j, i, k))
          throw std::invalid_argument("SCAlgebra: structure constants are not commutative at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
  for (std::size_t i = 0; i < d; ++i)
    if (!vec_equal(mul(unit_, basis_vec(i)), basis_vec(i)))
      throw std::invalid_argument("SCAlgebra: unit law fails on basis vector " + std::to_string(i));

  // associativity <=> for all (l, j): M_l M_j == sum_k sc(l,j,k) M_k, where
  // M_j is multiplication by e_j; exhaustive for dim <= 60, sampled above
  const bool exhaustive = d <= 60;
  if (!flat_.empty()) {
    const std::uint64_t p = field_.p();
    std::vector<std::vector<std::uint32_t>> M(d, std::vector<std::uint32_t>(d * d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          M[j][k * d + i] = flat_[(i * d + j) * d + k];
    std::vector<std::uint64_t> lhs(d * d), rhs(d * d);
    auto check_pair = [&](std::size_t l, std::size_t j) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      const auto& ml = M[l];
      const auto& mj = M[j];
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t s = 0; s < d; ++s) {
          const std::uint64_t a = ml[k * d + s];
          if (!a) continue;
          std::uint64_t* out = &lhs[k * d];
          const std::uint32_t* in = &mj[s * d];
          for (std::size_t i = 0; i < d; ++i) {
            out[i] += a * in[i];
            if (out[i] >= kLazyCap) out[i] %= p;
          }
        }
      const std::uint32_t* c = &flat_[(l * d + j) * d];
      for (std::size_t t = 0; t < d; ++t) {
        if (!c[t]) continue;
        const std::uint64_t ct = c[t];
        const auto& mt = M[t];
        for (std::size_t x = 0; x < d * d; ++x) {
          rhs[x] += ct * mt[x];
          if (rhs[x] >= kLazyCap) rhs[x] %= p;
        }
      }
      for (std::size_t x = 0; x < d * d; ++x)
        if (lhs[x] % p != rhs[x] % p)
          throw std::invalid_argument("SCAlgebra: associativity fails at basis pair (" +
                                      std::to_string(l) + "," + std::to_string(j) + ")");
    };
    if (exhaustive) {
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t j = 0; j < d; ++j) check_pair(l, j);
    } else {
      std::uint64_t seed = 0x5eedc0de5eedc0deull;
      for (int n = 0; n < 128; ++n) {
        const std::uint64_t u = splitmix64(seed);
        check_pair(u % d, (u / d) % d);
      }
    }
    return;
  }
  const Gfq& f = field_;
  std::vector<Mat<Gfq>> M(d);
  for (std::size_t j = 0; j < d; ++j) {
    M[j] = Mat<Gfq>(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) M[j].at(k, i) = sc(i, j, k);
  }
  auto check_pair = [&](std::size_t l, std::size_t j) {
    const Mat<Gfq> lhs = mat_mul(f, M[l], M[j]);
    Mat<Gfq> rhs(f, d, d);
    for (std::size_t t = 0; t < d; ++t) {
      const Gfq::Elem& ct = sc(l, j, t);
      if (f.is_zero(ct)) continue;
      for (std::size_t x = 0; x < d * d; ++x) rhs.a[x] = f.add(rhs.a[x], f.mul(ct, M[t].a[x]));
    }
    if (lhs.a != rhs.a)
      throw std::invalid_argument("SCAlgebra: associativity fails at basis pair (" +
                                  std::to_string(l) + "," + std::to_string(j) + ")");
  };
  if (exhaustive) {
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) check_pair(l, j);
  } else {
    std::uint64_t seed = 0x5eedc0de5eedc0deull;
    for (int n = 0; n < 128; ++n) {
      const std::uint64_t u = splitmix64(seed);
      check_pair(u % d, (u / d) % d);
    }
  }
}

bool Subspace::contains(const SCAlgebra::Vec& v) const {
  if (!ambient) throw std::logic_error("Subspace: no ambient algebra");
  if (v.size() != ambient->dim())
    throw std::invalid_argument("Subspace::contains: vector of the wrong length");
  SCAlgebra::Vec r = v;
  return reduce_against_rref(ambient->field(), basis, r);
}

SCAlgebra::Vec Subspace::row(std::size_t r) const {
  if (r >= basis.rows) throw std::out_of_range("Subspace::row: index out of range");
  SCAlgebra::Vec v(basis.cols);
  for (std::size_t c = 0; c < basis.cols; ++c) v[c] = basis.at(r, c);
  return v;
}

Subspace subspace_span(const SCAlgebra& a, const std::vector<SCAlgebra::Vec>& gens) {
  const Gfq& f = a.field();
  Mat<Gfq> m(f, gens.size(), a.dim());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != a.dim())
      throw std::invalid_argument("subspace_span: generator of the wrong length");
    for (std::size_t c = 0; c < a.dim(); ++c) m.at(r, c) = gens[r][c];
  }
  const std::size_t rank = rref(f, m);
  Mat<Gfq> b(f, rank, a.dim());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) b.at(r, c) = m.at(r, c);
  return Subspace{&a, std::move(b)};
}

Subspace full_space(const SCAlgebra& a) {
  return Subspace{&a, Mat<Gfq>::identity(a.field(), a.dim())};
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
  return u.ambient == v.ambient && u.basis.rows == v.basis.rows &&
         u.basis.cols == v.basis.cols && u.basis.a == v.basis.a;
}

Mat<Gfp> frobenius_operator(const SCAlgebra& a) {
  const Gfq& f = a.field();
  const Gfp& base = f.base();
  const std::uint32_t m = f.degree();
  const std::uint32_t p = f.p();
  const std::size_t d = a.dim();
  // w^{tp} for t < m, where w generates the field over GF(p)
  std::vector<Gfq::Elem> wtp(m);
  wtp[0] = f.one();
  if (m > 1) {
    const Gfq::Elem wp = f.pow(f.gen(), mpz_class(p));
    for (std::uint32_t t = 1; t < m; ++t) wtp[t] = f.mul(wtp[t - 1], wp);
  }
  Mat<Gfp> out(base, d * m, d * m);
  for (std::size_t i = 0; i < d; ++i) {
    const SCAlgebra::Vec xp = a.pow(a.basis_vec(i), mpz_class(p));
    for (std::uint32_t t = 0; t < m; ++t) {
      const std::size_t col = i * m + t;
      for (std::size_t u = 0; u < d; ++u) {
        const Gfq::Elem y = f.mul(xp[u], wtp[t]);
        for (std::uint32_t s = 0; s < m; ++s) out.at(u * m + s, col) = y[s];
      }
    }
  }
  return out;
}

namespace {

// the same constants read over the prime field (requires prime constants)
SCAlgebra prime_field_form(const SCAlgebra& a) {
  const std::size_t d = a.dim();
  Gfq f(a.field().p(), 1);
  std::vector<Gfq::Elem> sc(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) sc[(i * d + j) * d + k] = Gfq::Elem{a.sc(i, j, k)[0]};
  SCAlgebra::Vec unit(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Gfq::Elem& u = a.unit()[i];
    for (std::size_t t = 1; t < u.size(); ++t)
      if (u[t]) throw std::logic_error("SCAlgebra: unit escapes the prime field");
    unit[i] = Gfq::Elem{u[0]};
  }
  return SCAlgebra(std::move(f), d, std::move(sc), std::move(unit), a.labels());
}

} // namespace

Subspace radical(const SCAlgebra& a) {
  const Gfq& f = a.field();
  const std::uint32_t m = f.degree();
  const std::uint64_t p = f.p();
  const std::size_t d = a.dim();
  if (m > 1 && a.prime_constants()) {
    // the radical of the prime-field form extends coordinate-wise, and its
    // echelon basis stays echelon over the extension
    const SCAlgebra base_form = prime_field_form(a);
    const Subspace jb = radical(base_form);
    Mat<Gfq> b(f, jb.basis.rows, d);
    for (std::size_t r = 0; r < jb.basis.rows; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Gfq::Elem e(m, 0);
        e[0] = jb.basis.at(r, c)[0];
        b.at(r, c) = std::move(e);
      }
    return Subspace{&a, std::move(b)};
  }
  std::uint64_t k = 0, pk = 1;
  while (pk < d) {
    pk *= p;
    ++k;
  }
  const Mat<Gfp> fr = frobenius_operator(a);
  const Mat<Gfp> frk = mat_pow(f.base(), fr, k);
  const auto kr = rref_kernel(f.base(), frk);
  std::vector<SCAlgebra::Vec> gens;
  gens.reserve(kr.kernel.rows);
  for (std::size_t r = 0; r < kr.kernel.rows; ++r) {
    SCAlgebra::Vec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      Gfq::Elem e(m);
      for (std::uint32_t t = 0; t < m; ++t) e[t] = kr.kernel.at(r, i * m + t);
      v[i] = std::move(e);
    }
    gens.push_back(std::move(v));
  }
  return subspace_span(a, gens);
}

Subspace product_space(const Subspace& u, const Subspace& v) {
  if (!u.ambient || u.ambient != v.ambient)
    throw std::invalid_argument("product_space: subspaces of different algebras");
  const SCAlgebra& a = *u.ambient;
  std::vector<SCAlgebra::Vec> gens;
  gens.reserve(u.dim() * v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    const SCAlgebra::Vec x = u.row(r);
    for (std::size_t s = 0; s < v.dim(); ++s) gens.push_back(a.mul(x, v.row(s)));
  }
  return subspace_span(a, gens);
}

LoewyReport loewy_series(const SCAlgebra& a) {
  LoewyReport rep;
  rep.dim = a.dim();
  rep.layer_dims.push_back(a.dim());
  const Subspace j = radical(a);
  Subspace cur = j;
  while (cur.dim() > 0) {
    if (cur.dim() >= rep.layer_dims.back())
      throw std::logic_error("loewy_series: radical filtration failed to shrink");
    rep.layer_dims.push_back(cur.dim());
    cur = product_space(cur, j);
  }
  rep.layer_dims.push_back(0);
  rep.loewy_length = rep.layer_dims.size() - 1;
  return rep;
}

SCAlgebra extend_scalars(const SCAlgebra& a, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("extend_scalars: extension degree must be positive");
  if (!a.prime_constants())
    throw std::invalid_argument("extend_scalars: structure constants must lie in the prime field");
  const std::size_t d = a.dim();
  Gfq ext(a.field().p(), m);
  std::vector<Gfq::Elem> sc(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Gfq::Elem e(m, 0);
        e[0] = a.sc(i, j, k)[0];
        sc[(i * d + j) * d + k] = std::move(e);
      }
  SCAlgebra::Vec unit(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Gfq::Elem& u = a.unit()[i];
    for (std::size_t t = 1; t < u.size(); ++t)
      if (u[t])
        throw std::invalid_argument("extend_scalars: unit does not lie in the prime field");
    Gfq::Elem e(m, 0);
    e[0] = u[0];
    unit[i] = std::move(e);
  }
  return SCAlgebra(std::move(ext), d, std::move(sc), std::move(unit), a.labels());
}

void certify_radical(const SCAlgebra& a, const Subspace& j) {
  if (j.ambient != &a)
    throw std::invalid_argument("certify_radical: subspace belongs to a different algebra");
  const Gfq& f = a.field();
  const Gfp& base = f.base();
  const std::uint32_t m = f.degree();
  const std::uint64_t p = f.p();
  const std::size_t d = a.dim();
  mpz_class pk = 1;
  while (pk < mpz_class(static_cast<unsigned long>(d))) pk *= p;
  for (std::size_t r = 0; r < j.dim(); ++r)
    if (!a.vec_is_zero(a.pow(j.row(r), pk)))
      throw std::runtime_error("radical certificate: basis vector " + std::to_string(r) +
                               " is not nilpotent");
  for (std::size_t r = 0; r < j.dim(); ++r) {
    const SCAlgebra::Vec x = j.row(r);
    for (std::size_t i = 0; i < d; ++i)
      if (!j.contains(a.mul(x, a.basis_vec(i))))
        throw std::runtime_error("radical certificate: the subspace is not an ideal");
  }
  // x -> x^p must be injective on A/j; its matrix rows are the reduced images
  // of a complement basis (the non-pivot coordinates of j)
  std::vector<char> is_pivot(d, 0);
  for (std::size_t r = 0; r < j.basis.rows; ++r) {
    std::size_t c = 0;
    while (c < d && f.is_zero(j.basis.at(r, c))) ++c;
    is_pivot[c] = 1;
  }
  std::vector<Gfq::Elem> wtp(m);
  wtp[0] = f.one();
  if (m > 1) {
    const Gfq::Elem wp = f.pow(f.gen(), mpz_class(p));
    for (std::uint32_t t = 1; t < m; ++t) wtp[t] = f.mul(wtp[t - 1], wp);
  }
  const std::size_t q = d - j.dim();
  Mat<Gfp> img(base, q * m, d * m);
  std::size_t row = 0;
  for (std::size_t c = 0; c < d; ++c) {
    if (is_pivot[c]) continue;
    const SCAlgebra::Vec xp = a.pow(a.basis_vec(c), mpz_class(p));
    for (std::uint32_t t = 0; t < m; ++t) {
      SCAlgebra::Vec y = a.vec_scale(wtp[t], xp);
      reduce_against_rref(f, j.basis, y);
      for (std::size_t u = 0; u < d; ++u)
        for (std::uint32_t s = 0; s < m; ++s) img.at(row, u * m + s) = y[u][s];
      ++row;
    }
  }
  if (rref(base, img) != q * m)
    throw std::runtime_error("radical certificate: the p-th power map is singular on the quotient");
}

namespace {

SCAlgebra center_from_cube(std::size_t r, const std::vector<std::uint32_t>& cube_mod_p,
                           std::uint64_t p, std::vector<std::string> labels) {
  Gfq f(std::uint32_t(p), 1);
  std::vector<Gfq::Elem> sc(r * r * r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        sc[(i * r + j) * r + k] = Gfq::Elem{cube_mod_p[(k * r + i) * r + j]};
  SCAlgebra::Vec unit(r, f.zero());
  unit[0] = f.one();
  return SCAlgebra(std::move(f), r, std::move(sc), std::move(unit), std::move(labels));
}

void check_center_prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
    throw std::invalid_argument("center_algebra: modulus must be a prime below 2^31, got " +
                                std::to_string(p));
}

} // namespace

SCAlgebra center_algebra(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                         std::uint64_t p, unsigned threads) {
  check_center_prime(p);
  const std::size_t r = cls.count();
  const std::vector<std::uint64_t> cube = class_mult_table_enum(g, cls, threads);
  std::vector<std::uint32_t> red(cube.size());
  for (std::size_t i = 0; i < cube.size(); ++i) red[i] = std::uint32_t(cube[i] % p);
  return center_from_cube(r, red, p, cls.labels);
}

SCAlgebra center_algebra(const CharacterTable& t, std::uint64_t p, unsigned threads) {
  check_center_prime(p);
  const std::size_t r = t.count();
  const std::vector<mpz_class> cube = class_mult_table_burnside(t, threads);
  std::vector<std::uint32_t> red(cube.size());
  for (std::size_t i = 0; i < cube.size(); ++i)
    red[i] = std::uint32_t(mpz_fdiv_ui(cube[i].get_mpz_t(), static_cast<unsigned long>(p)));
  return center_from_cube(r, red, p, t.labels);
}

} // namespace loewy
