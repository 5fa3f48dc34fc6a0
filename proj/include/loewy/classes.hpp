#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loewy/group.hpp"

namespace loewy {

// Conjugacy classes in canonical order: the identity class first, the rest
// sorted by (element order, class size, smallest member index).  The
// representative of a class is its lexicographically smallest element.
// Labels are "1a", "2a", "3b", ...: element order, then a letter counting the
// classes of that order in canonical order.
struct ConjugacyClassSet {
  std::vector<std::uint32_t> class_of;        // element index -> class index
  std::vector<std::uint64_t> sizes;           // by class
  std::vector<std::uint64_t> element_orders;  // by class
  std::vector<std::uint32_t> rep_index;       // by class: element index of the representative
  std::vector<std::uint32_t> inverse_class;   // by class
  std::vector<std::string> labels;            // by class

  std::size_t count() const { return sizes.size(); }
  std::size_t index_of_label(const std::string& label) const;  // throws if absent
};

ConjugacyClassSet conjugacy_classes(const EnumeratedGroup& g);

// ascending element indices of the members of class c
std::vector<std::uint32_t> class_members(const ConjugacyClassSet& cls, std::uint32_t c);

// maps class c to the class of rep(c)^n
std::vector<std::uint32_t> power_map(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                                     std::uint64_t n);

// a_{ijk} = #{(x, y) in C_i x C_j : x * y = z} for a fixed z in C_k -- the
// class representative unless another member is supplied.  The count is
// independent of the choice of z.
std::uint64_t class_mult_coeff_enum(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                                    std::uint32_t i, std::uint32_t j, std::uint32_t k,
                                    std::optional<std::uint32_t> z_element = std::nullopt);

// full coefficient cube; entry (i, j, k) lives at [(k * r + i) * r + j]
std::vector<std::uint64_t> class_mult_table_enum(const EnumeratedGroup& g,
                                                 const ConjugacyClassSet& cls,
                                                 unsigned threads = 1);

} // namespace loewy
