#include "loewy/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "loewy/util.hpp"

namespace loewy {

namespace {

using Vec = SCAlgebra::Vec;

Gfq::Elem embed_residue(const Gfq& f, std::uint64_t v) {
  Gfq::Elem e(f.degree(), 0);
  e[0] = std::uint32_t(v % f.p());
  return e;
}

// coordinates of v in the rows of an rref basis, read off at the pivots
std::vector<Gfq::Elem> rref_coords(const Gfq& f, const Mat<Gfq>& basis, const Vec& v) {
  std::vector<Gfq::Elem> coords(basis.rows, f.zero());
  Vec r = v;
  for (std::size_t row = 0; row < basis.rows; ++row) {
    std::size_t pc = 0;
    while (pc < basis.cols && f.is_zero(basis.at(row, pc))) ++pc;
    if (pc == basis.cols) continue;
    const Gfq::Elem c = r[pc];
    if (f.is_zero(c)) continue;
    coords[row] = c;
    for (std::size_t j = pc; j < basis.cols; ++j)
      r[j] = f.sub(r[j], f.mul(c, basis.at(row, j)));
  }
  for (const auto& x : r)
    if (!f.is_zero(x)) throw std::logic_error("rref_coords: vector outside the span");
  return coords;
}

// unique solution of A x = b for invertible square A
std::vector<Gfq::Elem> solve_linear(const Gfq& f, const Mat<Gfq>& a,
                                    const std::vector<Gfq::Elem>& b) {
  const std::size_t n = a.rows;
  Mat<Gfq> aug(f, n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  if (rref(f, aug) != n) throw std::logic_error("solve_linear: singular system");
  std::vector<Gfq::Elem> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!f.is_one(aug.at(r, r))) throw std::logic_error("solve_linear: singular system");
    x[r] = aug.at(r, n);
  }
  return x;
}

// rad(A) e_B, validating that a caller-supplied radical matches the algebra
Subspace block_radical_part(const SCAlgebra& a, const Block& b, const Subspace* radp,
                            Subspace& rad_storage) {
  if (radp && radp->ambient != &a)
    throw std::invalid_argument("blocks: supplied radical belongs to a different algebra");
  if (!radp) rad_storage = radical(a);
  const Subspace& rad = radp ? *radp : rad_storage;
  return product_space(rad, subspace_span(a, {b.idempotent}));
}

} // namespace

BlockDecomposition decompose_blocks(const SCAlgebra& a) {
  const Gfq& f = a.field();
  const Gfp& base = f.base();
  const std::uint32_t m = f.degree();
  const std::uint64_t p = f.p();
  const std::size_t d = a.dim();

  const Subspace rad = radical(a);
  auto reduce = [&](Vec v) {
    reduce_against_rref(f, rad.basis, v);
    return v;
  };
  auto qmul = [&](const Vec& x, const Vec& y) { return reduce(a.mul(x, y)); };

  // the canonical complement of the radical: non-pivot coordinates
  std::vector<char> is_pivot(d, 0);
  for (std::size_t r = 0; r < rad.basis.rows; ++r) {
    std::size_t c = 0;
    while (c < d && f.is_zero(rad.basis.at(r, c))) ++c;
    is_pivot[c] = 1;
  }
  std::vector<std::size_t> npiv;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) npiv.push_back(c);
  const std::size_t q = npiv.size();

  // fixed space of x -> x^p on A/J over GF(p): exactly the GF(p)-span of the
  // primitive idempotents of the semisimple quotient
  std::vector<Gfq::Elem> wtp(m);
  wtp[0] = f.one();
  if (m > 1) {
    const Gfq::Elem wp = f.pow(f.gen(), mpz_class(p));
    for (std::uint32_t t = 1; t < m; ++t) wtp[t] = f.mul(wtp[t - 1], wp);
  }
  Mat<Gfp> fix(base, q * m, q * m);
  for (std::size_t ci = 0; ci < q; ++ci) {
    const Vec xp = reduce(a.pow(a.basis_vec(npiv[ci]), mpz_class(p)));
    for (std::uint32_t t = 0; t < m; ++t) {
      const std::size_t col = ci * m + t;
      for (std::size_t ui = 0; ui < q; ++ui) {
        const Gfq::Elem y = f.mul(xp[npiv[ui]], wtp[t]);
        for (std::uint32_t s = 0; s < m; ++s) fix.at(ui * m + s, col) = y[s];
      }
    }
  }
  for (std::size_t i = 0; i < q * m; ++i) fix.at(i, i) = base.sub(fix.at(i, i), base.one());
  const auto wk = rref_kernel(base, fix);
  const std::size_t nblocks = wk.kernel.rows;

  std::vector<Vec> wvecs;
  wvecs.reserve(nblocks);
  for (std::size_t r = 0; r < nblocks; ++r) {
    Vec v = a.zero_vec();
    for (std::size_t ci = 0; ci < q; ++ci) {
      Gfq::Elem e(m, 0);
      for (std::uint32_t t = 0; t < m; ++t) e[t] = wk.kernel.at(r, ci * m + t);
      v[npiv[ci]] = std::move(e);
    }
    wvecs.push_back(std::move(v));
  }

  // split the quotient along the eigenspaces of each fixed vector: every
  // w with w^p = w acts diagonalizably with eigenvalues in GF(p), and two
  // distinct primitive idempotents are separated by some basis vector
  std::vector<Mat<Gfq>> comps;
  {
    Mat<Gfq> init(f, q, d);
    for (std::size_t ci = 0; ci < q; ++ci) init.at(ci, npiv[ci]) = f.one();
    comps.push_back(std::move(init));
  }
  auto comp_row = [&](const Mat<Gfq>& v, std::size_t r) {
    Vec x(d);
    for (std::size_t c = 0; c < d; ++c) x[c] = v.at(r, c);
    return x;
  };
  for (const Vec& w : wvecs) {
    std::vector<Mat<Gfq>> next;
    for (const Mat<Gfq>& v : comps) {
      const std::size_t s = v.rows;
      if (s == 1) {
        next.push_back(v);
        continue;
      }
      Mat<Gfq> mw(f, s, s);
      for (std::size_t r = 0; r < s; ++r) {
        const auto coords = rref_coords(f, v, qmul(w, comp_row(v, r)));
        for (std::size_t r2 = 0; r2 < s; ++r2) mw.at(r2, r) = coords[r2];
      }
      std::size_t found = 0;
      for (std::uint64_t cval = 0; cval < p && found < s; ++cval) {
        Mat<Gfq> shifted = mw;
        const Gfq::Elem lam = embed_residue(f, cval);
        for (std::size_t r = 0; r < s; ++r)
          shifted.at(r, r) = f.sub(shifted.at(r, r), lam);
        const auto kr = rref_kernel(f, shifted);
        if (kr.kernel.rows == 0) continue;
        found += kr.kernel.rows;
        Mat<Gfq> sub(f, kr.kernel.rows, d);
        for (std::size_t rr = 0; rr < kr.kernel.rows; ++rr)
          for (std::size_t r = 0; r < s; ++r) {
            const Gfq::Elem& c = kr.kernel.at(rr, r);
            if (f.is_zero(c)) continue;
            for (std::size_t col = 0; col < d; ++col)
              sub.at(rr, col) = f.add(sub.at(rr, col), f.mul(c, v.at(r, col)));
          }
        if (rref(f, sub) != sub.rows)
          throw std::logic_error("decompose_blocks: eigenspace basis is dependent");
        next.push_back(std::move(sub));
      }
      if (found != s)
        throw std::logic_error("decompose_blocks: eigenspace dimensions do not fill the component");
    }
    comps = std::move(next);
  }
  if (comps.size() != nblocks)
    throw std::logic_error("decompose_blocks: component count differs from the idempotent space dimension");

  // quotient unit of each component, then Newton lifting through the radical
  const Gfq::Elem two = embed_residue(f, 2);
  const Gfq::Elem three = embed_residue(f, 3);
  std::size_t cap = 2;
  for (std::size_t t = 1; t < d; t <<= 1) cap += 2;
  BlockDecomposition out;
  out.blocks.reserve(nblocks);
  for (const Mat<Gfq>& v : comps) {
    const std::size_t s = v.rows;
    const Vec row0 = comp_row(v, 0);
    Mat<Gfq> m0(f, s, s);
    for (std::size_t r = 0; r < s; ++r) {
      const auto coords = rref_coords(f, v, qmul(row0, comp_row(v, r)));
      for (std::size_t r2 = 0; r2 < s; ++r2) m0.at(r2, r) = coords[r2];
    }
    std::vector<Gfq::Elem> rhs(s, f.zero());
    rhs[0] = f.one();
    const auto x = solve_linear(f, m0, rhs);
    Vec eps = a.zero_vec();
    for (std::size_t r = 0; r < s; ++r)
      eps = a.vec_add(eps, a.vec_scale(x[r], comp_row(v, r)));
    if (!a.vec_equal(qmul(eps, eps), eps))
      throw std::logic_error("decompose_blocks: quotient idempotent is not idempotent");
    Vec e = eps;
    for (std::size_t it = 0; it < cap; ++it) {
      const Vec e2 = a.mul(e, e);
      if (a.vec_equal(e2, e)) break;
      const Vec t3 = a.vec_sub(a.vec_scale(three, a.unit()), a.vec_scale(two, e));
      e = a.mul(e2, t3);
    }
    if (!a.vec_equal(a.mul(e, e), e))
      throw std::logic_error("decompose_blocks: idempotent lifting did not converge");
    if (a.vec_is_zero(e)) throw std::logic_error("decompose_blocks: lifted idempotent is zero");
    Block b;
    b.idempotent = std::move(e);
    b.residue_degree = s;
    out.blocks.push_back(std::move(b));
  }

  Vec sum = a.zero_vec();
  for (const Block& b : out.blocks) sum = a.vec_add(sum, b.idempotent);
  if (!a.vec_equal(sum, a.unit()))
    throw std::logic_error("decompose_blocks: idempotents do not sum to the unit");
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!a.vec_is_zero(a.mul(out.blocks[i].idempotent, out.blocks[j].idempotent)))
        throw std::logic_error("decompose_blocks: idempotents are not orthogonal");

  const Subspace whole = full_space(a);
  std::size_t total = 0;
  for (Block& b : out.blocks) {
    b.component = product_space(whole, subspace_span(a, {b.idempotent}));
    total += b.component.dim();
  }
  if (total != d)
    throw std::logic_error("decompose_blocks: component dimensions do not sum to the dimension");

  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& x, const Block& y) {
    if (x.component.dim() != y.component.dim()) return x.component.dim() > y.component.dim();
    return x.idempotent < y.idempotent;
  });
  return out;
}

std::vector<Gfq::Elem> block_central_character(const SCAlgebra& a, const Block& b,
                                               const Subspace* rad) {
  if (b.residue_degree != 1)
    throw std::invalid_argument("block_central_character: residue field has degree " +
                                std::to_string(b.residue_degree) +
                                "; extend scalars (extend_scalars) until the block splits");
  const Gfq& f = a.field();
  Subspace rad_storage;
  const Subspace rb = block_radical_part(a, b, rad, rad_storage);
  Vec u = b.idempotent;
  reduce_against_rref(f, rb.basis, u);
  std::size_t c0 = 0;
  while (c0 < u.size() && f.is_zero(u[c0])) ++c0;
  if (c0 == u.size())
    throw std::logic_error("block_central_character: idempotent lies in the radical");
  const Gfq::Elem u0inv = f.inv(u[c0]);
  std::vector<Gfq::Elem> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec v = a.mul(a.basis_vec(i), b.idempotent);
    reduce_against_rref(f, rb.basis, v);
    const Gfq::Elem lam = f.mul(v[c0], u0inv);
    for (std::size_t c = 0; c < u.size(); ++c)
      if (v[c] != f.mul(lam, u[c]))
        throw std::runtime_error(
            "block_central_character: a class sum does not act as a scalar on the block");
    out[i] = lam;
  }
  return out;
}

std::size_t principal_block(const SCAlgebra& a, BlockDecomposition& dec,
                            const std::vector<mpz_class>& class_sizes) {
  if (class_sizes.size() != a.dim())
    throw std::invalid_argument("principal_block: class size count differs from the dimension");
  const Gfq& f = a.field();
  const auto p = static_cast<unsigned long>(f.p());
  const Subspace rad = radical(a);
  std::vector<Gfq::Elem> lam0(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    lam0[i] = embed_residue(f, mpz_fdiv_ui(class_sizes[i].get_mpz_t(), p));
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t found = npos;
  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
    const Block& b = dec.blocks[bi];
    const Subspace rb = product_space(rad, subspace_span(a, {b.idempotent}));
    bool match = true;
    for (std::size_t i = 0; i < a.dim() && match; ++i) {
      const Vec v = a.vec_sub(a.mul(a.basis_vec(i), b.idempotent),
                              a.vec_scale(lam0[i], b.idempotent));
      match = rb.contains(v);
    }
    if (!match) continue;
    if (found != npos)
      throw std::runtime_error(
          "principal_block: several blocks match the class sizes; decomposition inconsistent");
    found = bi;
  }
  if (found == npos)
    throw std::runtime_error(
        "principal_block: no block matches the class sizes; decomposition inconsistent");
  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi)
    dec.blocks[bi].is_principal = bi == found;
  return found;
}

unsigned block_defect(const SCAlgebra& a, const Block& b, const mpz_class& group_order,
                      const std::vector<mpz_class>& class_sizes, const Subspace* rad) {
  if (class_sizes.size() != a.dim())
    throw std::invalid_argument("block_defect: class size count differs from the dimension");
  const auto p = static_cast<unsigned long>(a.field().p());
  Subspace rad_storage;
  const Subspace rb = block_radical_part(a, b, rad, rad_storage);
  const unsigned nu_g = valuation(group_order, p);
  bool found = false;
  unsigned best = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec v = a.mul(a.basis_vec(i), b.idempotent);
    if (rb.contains(v)) continue;  // lambda_B vanishes on this class
    const unsigned nu = nu_g - valuation(class_sizes[i], p);
    best = found ? std::min(best, nu) : nu;
    found = true;
  }
  if (!found) throw std::logic_error("block_defect: central character vanishes everywhere");
  return best;
}

LoewyReport block_loewy_series(const SCAlgebra& a, const Block& b, const Subspace* rad) {
  if (rad && rad->ambient != &a)
    throw std::invalid_argument("blocks: supplied radical belongs to a different algebra");
  Subspace rad_storage;
  if (!rad) rad_storage = radical(a);
  const Subspace& j = rad ? *rad : rad_storage;
  LoewyReport rep;
  rep.dim = b.component.dim();
  rep.layer_dims.push_back(rep.dim);
  Subspace cur = product_space(j, subspace_span(a, {b.idempotent}));
  while (cur.dim() > 0) {
    if (cur.dim() >= rep.layer_dims.back())
      throw std::logic_error("block_loewy_series: radical filtration failed to shrink");
    rep.layer_dims.push_back(cur.dim());
    cur = product_space(cur, j);
  }
  rep.layer_dims.push_back(0);
  rep.loewy_length = rep.layer_dims.size() - 1;
  return rep;
}

Subspace radical_basis_single_block(const SCAlgebra& a,
                                    const std::vector<mpz_class>& class_sizes) {
  if (class_sizes.size() != a.dim())
    throw std::invalid_argument(
        "radical_basis_single_block: class size count differs from the dimension");
  if (!a.vec_equal(a.unit(), a.basis_vec(0)))
    throw std::invalid_argument(
        "radical_basis_single_block: expects the identity class sum as basis vector 0");
  const Gfq& f = a.field();
  const auto p = static_cast<unsigned long>(f.p());
  std::vector<Vec> gens;
  gens.reserve(a.dim() - 1);
  for (std::size_t i = 1; i < a.dim(); ++i) {
    const Gfq::Elem lam = embed_residue(f, mpz_fdiv_ui(class_sizes[i].get_mpz_t(), p));
    gens.push_back(a.vec_sub(a.basis_vec(i), a.vec_scale(lam, a.unit())));
  }
  const Subspace cand = subspace_span(a, gens);
  if (!subspace_equal(cand, radical(a)))
    throw std::runtime_error("radical_basis_single_block: the algebra is not a single split block");
  return cand;
}

DefectCountCheck full_defect_count_check(const SCAlgebra& a, const BlockDecomposition& dec,
                                         const mpz_class& group_order,
                                         const std::vector<mpz_class>& class_sizes,
                                         const std::vector<std::uint64_t>& element_orders) {
  if (class_sizes.size() != a.dim() || element_orders.size() != a.dim())
    throw std::invalid_argument(
        "full_defect_count_check: class data count differs from the dimension");
  const auto p = static_cast<unsigned long>(a.field().p());
  const unsigned nu_g = valuation(group_order, p);
  const Subspace rad = radical(a);
  DefectCountCheck out;
  for (const Block& b : dec.blocks) {
    const unsigned def =
        b.defect ? *b.defect : block_defect(a, b, group_order, class_sizes, &rad);
    if (def == nu_g) ++out.full_defect_blocks;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (element_orders[i] % p != 0 && valuation(class_sizes[i], p) == 0)
      ++out.full_defect_classes;
  out.consistent = out.full_defect_blocks == out.full_defect_classes;
  return out;
}

} // namespace loewy
