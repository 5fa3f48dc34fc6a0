#include "loewy/unitary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "loewy/linalg.hpp"
#include "loewy/util.hpp"

namespace loewy {

namespace {

struct FieldData {
  std::uint32_t p, e;
  std::uint64_t q;
  Gfq f;  // GF(q^2)
};

FieldData make_field(std::uint32_t q) {
  if (q < 2 || q > 32) throw std::invalid_argument("unital: q must be a prime power in [2, 32]");
  auto fac = factorize_u64(q);
  if (fac.size() != 1) throw std::invalid_argument("unital: q must be a prime power");
  const std::uint32_t p = static_cast<std::uint32_t>(fac[0].first);
  const std::uint32_t e = static_cast<std::uint32_t>(fac[0].second);
  return FieldData{p, e, q, Gfq(p, 2 * e)};
}

Gfq::Elem sigma(const Gfq& f, std::uint64_t q, const Gfq::Elem& x) {
  return f.pow(x, mpz_class(static_cast<unsigned long>(q)));
}

Mat3 antidiag_form(const Gfq& f) {
  Mat3 m{f.zero(), f.zero(), f.one(), f.zero(), f.one(), f.zero(), f.one(), f.zero(), f.zero()};
  return m;
}

} // namespace

ProjPoint UnitalGeometry::normalized(const ProjPoint& x) const {
  for (int i = 0; i < 3; ++i) {
    if (field.is_zero(x[i])) continue;
    const Gfq::Elem s = field.inv(x[i]);
    return ProjPoint{field.mul(x[0], s), field.mul(x[1], s), field.mul(x[2], s)};
  }
  throw std::invalid_argument("unital: zero vector is not a projective point");
}

std::size_t UnitalGeometry::index_of(const ProjPoint& x) const {
  const ProjPoint n = normalized(x);
  auto it = std::lower_bound(points.begin(), points.end(), n);
  if (it == points.end() || *it != n) throw std::invalid_argument("unital: point is not on the unital");
  return static_cast<std::size_t>(it - points.begin());
}

UnitalGeometry unital_geometry(std::uint32_t q) {
  auto [p, e, qq, f] = make_field(q);
  const std::uint64_t q2 = qq * qq;

  // isotropic points with x0 != 0 are [1, y, z] with trace(z) = -norm(y);
  // the only one with x0 = 0 is [0, 0, 1]
  std::map<Gfq::Elem, std::vector<Gfq::Elem>> by_trace;
  for (std::uint64_t i = 0; i < q2; ++i) {
    Gfq::Elem z = f.nth_element(i);
    by_trace[f.add(z, sigma(f, qq, z))].push_back(z);
  }

  UnitalGeometry geo{qq, f, {}};
  geo.points.reserve(qq * qq * qq + 1);
  for (std::uint64_t i = 0; i < q2; ++i) {
    Gfq::Elem y = f.nth_element(i);
    const Gfq::Elem target = f.neg(f.mul(y, sigma(f, qq, y)));
    auto it = by_trace.find(target);
    if (it == by_trace.end()) continue;
    for (const auto& z : it->second) geo.points.push_back(ProjPoint{f.one(), y, z});
  }
  geo.points.push_back(ProjPoint{f.zero(), f.zero(), f.one()});
  std::sort(geo.points.begin(), geo.points.end());

  if (geo.points.size() != qq * qq * qq + 1)
    throw std::logic_error("unital: point count disagrees with q^3 + 1");
  return geo;
}

std::vector<ProjPoint> isotropic_points(std::uint32_t q) { return unital_geometry(q).points; }

Mat3 mat3_mul(const Gfq& f, const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Gfq::Elem s = f.zero();
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i * 3 + k], b[k * 3 + j]));
      r[i * 3 + j] = s;
    }
  return r;
}

bool preserves_hermitian_form(const Gfq& f, std::uint64_t q, const Mat3& g) {
  Mat3 gt, gs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      gt[i * 3 + j] = g[j * 3 + i];
      gs[i * 3 + j] = sigma(f, q, g[i * 3 + j]);
    }
  const Mat3 m = antidiag_form(f);
  return mat3_mul(f, mat3_mul(f, gt, m), gs) == m;
}

Perm permutation_on_unital(const UnitalGeometry& geo, const Mat3& g) {
  const Gfq& f = geo.field;
  std::vector<Perm::Pt> img(geo.points.size());
  for (std::size_t i = 0; i < geo.points.size(); ++i) {
    const ProjPoint& x = geo.points[i];
    ProjPoint y{f.zero(), f.zero(), f.zero()};
    for (int c = 0; c < 3; ++c)
      for (int r = 0; r < 3; ++r) y[c] = f.add(y[c], f.mul(x[r], g[r * 3 + c]));
    img[i] = static_cast<Perm::Pt>(geo.index_of(y));
  }
  return Perm(std::move(img));
}

std::vector<Perm> psu3_generators(std::uint32_t q) {
  auto [p, e, qq, f] = make_field(q);
  UnitalGeometry geo = unital_geometry(q);
  const std::uint64_t q2 = qq * qq;

  auto trace = [&](const Gfq::Elem& x) { return f.add(x, sigma(f, qq, x)); };
  auto find_b = [&](const Gfq::Elem& a) {
    const Gfq::Elem target = f.neg(f.mul(a, sigma(f, qq, a)));
    for (std::uint64_t i = 0; i < q2; ++i) {
      Gfq::Elem z = f.nth_element(i);
      if (trace(z) == target) return z;
    }
    throw std::logic_error("unital: no transvection parameter found");
  };
  // u(a, b) = [[1, a, b], [0, 1, -a^q], [0, 0, 1]], valid when norm(a) + trace(b) = 0
  auto unipotent = [&](const Gfq::Elem& a, const Gfq::Elem& b) {
    return Mat3{f.one(),  a,       b,
                f.zero(), f.one(), f.neg(sigma(f, qq, a)),
                f.zero(), f.zero(), f.one()};
  };

  std::vector<Mat3> mats;
  // one transvection per GF(p)-basis vector of GF(q^2) in the 'a' slot
  for (std::uint32_t k = 0; k < 2 * e; ++k) {
    Gfq::Elem a = f.zero();
    a[k] = 1;
    mats.push_back(unipotent(a, find_b(a)));
  }
  // central transvections u(0, z) for a GF(p)-basis of the trace-zero space
  {
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint64_t i = 1; i < q2 && basis.size() < e; ++i) {
      Gfq::Elem z = f.nth_element(i);
      if (!f.is_zero(trace(z))) continue;
      Mat<Gfp> m(f.base(), basis.size() + 1, 2 * e);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::uint32_t c = 0; c < 2 * e; ++c) m.at(r, c) = basis[r][c];
      for (std::uint32_t c = 0; c < 2 * e; ++c) m.at(basis.size(), c) = z[c];
      if (rref(f.base(), m) == basis.size() + 1) {
        basis.push_back(z);
        mats.push_back(unipotent(f.zero(), z));
      }
    }
    if (basis.size() != e) throw std::logic_error("unital: trace-zero space has unexpected dimension");
  }
  mats.push_back(antidiag_form(f));

  std::vector<Perm> gens;
  for (const auto& m : mats) {
    if (!preserves_hermitian_form(f, qq, m))
      throw std::logic_error("unital: generator does not preserve the Hermitian form");
    gens.push_back(permutation_on_unital(geo, m));
  }
  return gens;
}

} // namespace loewy
