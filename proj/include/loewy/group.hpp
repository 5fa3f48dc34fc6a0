#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loewy/perm.hpp"

namespace loewy {

// A fully enumerated permutation group.  Elements are stored packed in a
// single buffer (one byte per point for degree <= 256, two bytes above) and
// sorted lexicographically by image array; that ordering is the canonical
// element order used by every algorithm downstream, so repeated runs are
// bit-identical.  Index 0 is always the identity.
struct EnumerationOptions {
  std::uint64_t max_order = 2'000'000;
  std::string name;
};

class EnumeratedGroup {
public:
  using Options = EnumerationOptions;

  // BFS closure of the generators; throws if the closure exceeds max_order.
  static EnumeratedGroup enumerate(std::vector<Perm> generators, const Options& opts = {});

  // Wrap an already-closed, lexicographically sorted element set (normalizer
  // and core computations produce these).  Closure is asserted as a side
  // effect of the greedy generating-set computation.
  static EnumeratedGroup from_sorted_elements(std::size_t degree, const std::vector<Perm>& elements,
                                              std::string name);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return count_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::vector<Perm>& generators() const { return generators_; }
  // greedy generating subset; used by orbit algorithms
  const std::vector<Perm>& small_generators() const { return small_generators_; }

  Perm element(std::size_t i) const;
  std::optional<std::uint32_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  bool wide() const { return degree_ > 256; }
  const std::uint8_t* data8() const { return pool8_.data(); }
  const std::uint16_t* data16() const { return pool16_.data(); }

  std::vector<Perm> all_elements() const;

private:
  EnumeratedGroup() = default;
  void pack(const std::vector<Perm>& sorted_elements);

  std::size_t degree_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint8_t> pool8_;
  std::vector<std::uint16_t> pool16_;
  std::vector<Perm> generators_;
  std::vector<Perm> small_generators_;
  std::string name_;
};

// BFS closure of a generator list; returns the sorted element list.
// An empty generator list with an explicit degree yields the trivial group.
std::vector<Perm> closure(const std::vector<Perm>& generators, std::size_t degree,
                          std::uint64_t max_order);

// Greedy small generating set: repeatedly adjoin the first canonical element
// outside the subgroup generated so far.  Throws if `elements` is not closed.
std::vector<Perm> small_generating_set(const std::vector<Perm>& sorted_elements, std::size_t degree);

// ---- group sources ---------------------------------------------------------

// Text format: `degree N` first, then optional `order M` / `name S` headers,
// then one generator per line, either 1-based disjoint cycles "(1,2)(3,4)"
// or a 1-based image list "[2,1,4,3]".  '#' starts a comment.
EnumeratedGroup group_from_file(const std::string& path, const EnumeratedGroup::Options& opts = {});

// Builtin families: symN, altN, cycN, dihN (N = group order, even),
// psu3_Q, prod(a,b).
EnumeratedGroup builtin_group(const std::string& spec, const EnumeratedGroup::Options& opts = {});

// Dispatch "builtin:<spec>" or a file path (optionally "file:<path>").
EnumeratedGroup load_group(const std::string& spec, const EnumeratedGroup::Options& opts = {});

} // namespace loewy
