#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "loewy/gfq.hpp"
#include "loewy/perm.hpp"

namespace loewy {

// Projective point of PG(2, q^2) as a normalized coordinate row; 3x3 matrix
// over GF(q^2), row-major, acting on points as row vectors from the right.
using ProjPoint = std::array<Gfq::Elem, 3>;
using Mat3 = std::array<Gfq::Elem, 9>;

// The Hermitian unital in PG(2, q^2): the q^3 + 1 projective points [x] with
//   x0 * x2^q + x1 * x1^q + x2 * x0^q = 0,
// each normalized so its first nonzero coordinate is 1, stored sorted.
struct UnitalGeometry {
  std::uint64_t q = 0;
  Gfq field;  // GF(q^2)
  std::vector<ProjPoint> points;

  ProjPoint normalized(const ProjPoint& x) const;
  std::size_t index_of(const ProjPoint& x) const;  // normalizes, then looks up
};

UnitalGeometry unital_geometry(std::uint32_t q);
std::vector<ProjPoint> isotropic_points(std::uint32_t q);

Mat3 mat3_mul(const Gfq& f, const Mat3& a, const Mat3& b);

// whether g^T * M * g^sigma == M for M = antidiag(1,1,1), sigma = (. -> .^q)
bool preserves_hermitian_form(const Gfq& f, std::uint64_t q, const Mat3& g);

// Permutation of the unital's point list induced by a form-preserving matrix.
Perm permutation_on_unital(const UnitalGeometry& geo, const Mat3& g);

// Matrices generating SU(3, q) -- unipotent transvections plus the antidiagonal
// involution -- converted to permutations of the unital.  Scalars act trivially,
// so the induced permutation group is PSU(3, q).  Every matrix is checked to
// preserve the Hermitian form before conversion.
std::vector<Perm> psu3_generators(std::uint32_t q);

} // namespace loewy
