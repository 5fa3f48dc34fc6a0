#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "loewy/chartab.hpp"
#include "loewy/classes.hpp"
#include "loewy/gfq.hpp"
#include "loewy/group.hpp"
#include "loewy/linalg.hpp"

namespace loewy {

// Finite-dimensional commutative associative unital algebra over GF(p^m),
// presented by structure constants on a distinguished basis e_0..e_{d-1}:
//
//   e_i * e_j = sum_k  sc(i, j, k) e_k.
//
// Vectors are coordinate rows (one field element per basis vector).  The
// constructor validates the axioms: commutativity sc(i,j,k) == sc(j,i,k),
// the unit law, and associativity -- checked exhaustively for dim <= 60 and
// on a fixed deterministic sample of pairs above that.
class SCAlgebra {
public:
  using Vec = std::vector<Gfq::Elem>;

  SCAlgebra(Gfq field, std::size_t dim, std::vector<Gfq::Elem> constants,
            Vec unit, std::vector<std::string> labels = {});

  const Gfq& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Gfq::Elem& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // whether every structure constant lies in the prime field GF(p)
  bool prime_constants() const { return !flat_.empty(); }

  Vec zero_vec() const;
  Vec basis_vec(std::size_t i) const;
  bool vec_is_zero(const Vec& x) const;
  bool vec_equal(const Vec& x, const Vec& y) const;
  Vec vec_add(const Vec& x, const Vec& y) const;
  Vec vec_sub(const Vec& x, const Vec& y) const;
  Vec vec_scale(const Gfq::Elem& c, const Vec& x) const;

  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow(Vec x, const mpz_class& e) const;  // e >= 1

private:
  void validate() const;

  Gfq field_;
  std::size_t dim_ = 0;
  std::vector<Gfq::Elem> sc_;       // [(i*dim + j)*dim + k]
  std::vector<std::uint32_t> flat_; // same cube as prime residues, when possible
  Vec unit_;
  std::vector<std::string> labels_;
};

// A subspace of the coordinate space of an algebra, held as the unique
// reduced row echelon basis (zero rows dropped), so equal subspaces have
// byte-equal bases.  The ambient pointer identifies which algebra the
// coordinates refer to; the algebra must outlive the subspace.
struct Subspace {
  const SCAlgebra* ambient = nullptr;
  Mat<Gfq> basis;

  std::size_t dim() const { return basis.rows; }
  bool contains(const SCAlgebra::Vec& v) const;
  SCAlgebra::Vec row(std::size_t r) const;
};

Subspace subspace_span(const SCAlgebra& a, const std::vector<SCAlgebra::Vec>& gens);
Subspace full_space(const SCAlgebra& a);
bool subspace_equal(const Subspace& u, const Subspace& v);

// Matrix of x -> x^p on the underlying GF(p)-vector space of the algebra.
// Coordinate (i*m + t) is the coefficient of e_i * w^t, where w generates
// GF(p^m) over GF(p); column i*m+t holds the image (e_i w^t)^p = e_i^p w^{tp}.
Mat<Gfp> frobenius_operator(const SCAlgebra& a);

// Jacobson radical = set of nilpotents = kernel of the k-fold Frobenius
// iterate for the least k with p^k >= dim, returned as a canonical Subspace.
Subspace radical(const SCAlgebra& a);

// Span of all pairwise products u * v of basis vectors of the two subspaces.
Subspace product_space(const Subspace& u, const Subspace& v);

// Dimensions of the radical filtration A > J > J^2 > ... of a commutative
// algebra.  layer_dims = [dim A, dim J, dim J^2, ..., 0]; the Loewy length
// is the first exponent n with J^n = 0, i.e. the index of the final zero.
struct LoewyReport {
  std::size_t dim = 0;
  std::vector<std::size_t> layer_dims;
  std::size_t loewy_length = 0;
};

LoewyReport loewy_series(const SCAlgebra& a);

// The same structure constants read over GF(p^m).  Requires every constant
// (and hence the unit) to lie in the prime field.
SCAlgebra extend_scalars(const SCAlgebra& a, std::uint32_t m);

// Independent certificate that j is the Jacobson radical: every basis
// vector is nilpotent, j is an ideal, and x -> x^p is injective on A/j.
// Throws std::runtime_error naming the violated property.
void certify_radical(const SCAlgebra& a, const Subspace& j);

// Center of the group algebra kG over GF(p) on the class-sum basis: the
// structure constants are the class multiplication coefficients reduced
// mod p.  The identity class (index 0) is the unit.
SCAlgebra center_algebra(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                         std::uint64_t p, unsigned threads = 1);

// Same algebra computed from a character table via the column orthogonality
// formula instead of element enumeration.
SCAlgebra center_algebra(const CharacterTable& t, std::uint64_t p,
                         unsigned threads = 1);

} // namespace loewy
