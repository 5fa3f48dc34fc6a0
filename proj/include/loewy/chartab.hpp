#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "loewy/cyclotomic.hpp"

namespace loewy {

// An ordinary character table read from a file.  Classes and characters keep
// their file order; every index is 0-based in memory and 1-based on disk.
struct CharacterTable {
  std::string name;
  mpz_class order;
  std::uint64_t exponent = 1;
  std::vector<mpz_class> sizes;
  std::vector<std::uint64_t> element_orders;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint64_t> primes;                   // primes dividing the order, ascending
  std::vector<std::vector<std::uint32_t>> power_maps;  // [t][c] = class of rep(c)^primes[t]
  std::vector<std::string> labels;
  std::vector<std::vector<Cyclotomic>> chars;          // rows: characters; columns: classes

  std::size_t count() const { return sizes.size(); }
  std::size_t index_of_label(const std::string& label) const;  // throws if absent
};

// Parses and fully validates; throws with file/line context on syntax errors
// and with named indices on consistency failures.
CharacterTable parse_character_table(const std::string& path);
CharacterTable parse_character_table_text(const std::string& text, const std::string& origin);

// The consistency half of parsing, exposed for direct use on built tables:
// identity class first, trivial character first, size/order/exponent tallies,
// inverse and power map sanity, conjugate symmetry, row and column
// orthogonality, degree square sum.
void validate_character_table(const CharacterTable& t);

// Canonical text form; parse(serialize(t)) == t, and serialization is a fixed
// point on files produced by it.
std::string serialize_character_table(const CharacterTable& t);

// a_{ijk} = (|C_i| |C_j| / |G|) * sum over irreducible characters of
// chi(g_i) chi(g_j) chi(g_k^-1) / chi(1), which must come out a nonnegative
// rational integer; anything else reports a corrupted table.
mpz_class burnside_coeff(const CharacterTable& t, std::uint32_t i, std::uint32_t j,
                         std::uint32_t k);

// full coefficient cube; entry (i, j, k) lives at [(k * r + i) * r + j]
std::vector<mpz_class> class_mult_table_burnside(const CharacterTable& t, unsigned threads = 1);

} // namespace loewy
