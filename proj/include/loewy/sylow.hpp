#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "loewy/group.hpp"

namespace loewy {

// a Sylow p-subgroup of g (the one grown deterministically from the first
// canonical p-element by successive normalizer extensions)
EnumeratedGroup sylow_subgroup(const EnumeratedGroup& g, std::uint64_t p);

// the subgroup of elements of g normalizing the subgroup h
EnumeratedGroup normalizer(const EnumeratedGroup& g, const EnumeratedGroup& h);

struct TIResult {
  bool trivial = true;                 // distinct conjugates meet only in the identity
  std::uint64_t conjugate_count = 1;   // size of the conjugation orbit of the subgroup
  std::uint64_t max_intersection = 1;  // largest |P meet Q| over conjugates Q != P
  // a conjugator g with P^g != P and a nonidentity element of P meet P^g
  std::optional<std::pair<Perm, Perm>> witness;
};

// checks whether the conjugates of `sub` pairwise intersect trivially
TIResult trivial_intersection_check(const EnumeratedGroup& g, const EnumeratedGroup& sub);

// the largest normal p-subgroup: intersection of all conjugates of a Sylow p-subgroup
EnumeratedGroup p_core(const EnumeratedGroup& g, std::uint64_t p);

} // namespace loewy
