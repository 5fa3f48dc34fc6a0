#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "loewy/sc_algebra.hpp"

namespace loewy {

// One factor of the decomposition 1 = e_1 + ... + e_t of a commutative
// algebra into primitive orthogonal idempotents: the ideal A e_B together
// with its idempotent.  residue_degree is the dimension over the ground
// field of the block's semisimple quotient, which is a field precisely
// because e_B is primitive; degree 1 means the block is split.
struct Block {
  SCAlgebra::Vec idempotent;
  Subspace component;              // A e_B, canonical basis
  std::size_t residue_degree = 0;
  std::optional<unsigned> defect;  // assigned from block_defect by callers
  bool is_principal = false;       // flagged by principal_block

  std::size_t dim() const { return component.dim(); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
};

// Complete block decomposition, deterministically ordered by descending
// component dimension (ties broken by the idempotent's coordinates).
// The idempotents of the semisimple quotient span the fixed space of
// x -> x^p over GF(p); splitting along the eigenspaces of its basis vectors
// isolates them, and each is then lifted through the radical by the cubic
// Newton step e <- 3e^2 - 2e^3.  Orthogonality, primitivity, completeness
// (sum = 1) and the dimension count are all verified before returning.
BlockDecomposition decompose_blocks(const SCAlgebra& a);

// lambda_B(e_i) for every basis vector: the scalar by which e_i e_B acts on
// the (one-dimensional) semisimple quotient of the block.  Requires
// residue_degree == 1.  Passing the precomputed radical avoids recomputing
// it per block.
std::vector<Gfq::Elem> block_central_character(const SCAlgebra& a, const Block& b,
                                               const Subspace* rad = nullptr);

// Index of the unique block whose central character sends every class sum
// to its class size mod p; flags it (and unflags the others).  Throws if
// no block or several blocks qualify.
std::size_t principal_block(const SCAlgebra& a, BlockDecomposition& dec,
                            const std::vector<mpz_class>& class_sizes);

// min_i v_p(|G| / |C_i|) over the classes with lambda_B(C_i) != 0, where
// nonvanishing is membership of e_i e_B outside rad(A) e_B -- well defined
// whether or not the block is split.  (The identity class always contributes
// v_p(|G|), so the principal block has full defect.)
unsigned block_defect(const SCAlgebra& a, const Block& b, const mpz_class& group_order,
                      const std::vector<mpz_class>& class_sizes,
                      const Subspace* rad = nullptr);

// Radical filtration of the block ideal: layer_dims = [dim A e_B,
// dim J e_B, dim J^2 e_B, ..., 0], Loewy length = index of the final zero.
LoewyReport block_loewy_series(const SCAlgebra& a, const Block& b,
                               const Subspace* rad = nullptr);

// For a center that is a single block with split residue field, the radical
// has the explicit basis { C_i - (|C_i| mod p) 1 : i != 0 }.  Returns that
// span after checking it equals radical(a); throws otherwise.
Subspace radical_basis_single_block(const SCAlgebra& a,
                                    const std::vector<mpz_class>& class_sizes);

// Counting consistency check: the number of blocks of full defect v_p(|G|)
// against the number of p-regular classes whose elements have centralizer
// order divisible by the full power of p (equivalently p does not divide
// the class size).
struct DefectCountCheck {
  std::size_t full_defect_blocks = 0;
  std::size_t full_defect_classes = 0;
  bool consistent = false;
};

DefectCountCheck full_defect_count_check(const SCAlgebra& a, const BlockDecomposition& dec,
                                         const mpz_class& group_order,
                                         const std::vector<mpz_class>& class_sizes,
                                         const std::vector<std::uint64_t>& element_orders);

} // namespace loewy
