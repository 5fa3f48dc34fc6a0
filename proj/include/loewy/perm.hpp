#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loewy {

// A permutation of {0, ..., degree-1} stored as its image array.
// Composition is left-to-right: (a * b) means "apply a, then b".
class Perm {
public:
  using Pt = std::uint16_t;

  Perm() = default;
  explicit Perm(std::vector<Pt> images);  // validates bijectivity

  static Perm identity(std::size_t degree);

  // Disjoint-cycle text with 1-based points, e.g. "(1,2)(3,4,5)"; bare
  // whitespace-separated cycles are also accepted.  "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Pt operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Pt>& images() const { return img_; }

  bool is_identity() const;
  Perm compose(const Perm& then) const;  // this first, `then` second
  Perm inverse() const;
  Perm conjugate(const Perm& g) const;   // g^-1 * this * g
  std::uint64_t order() const;

  std::string cycle_string() const;  // 1-based disjoint cycles, "()" for identity

  friend bool operator==(const Perm& a, const Perm& b) = default;
  // lexicographic on image arrays; the canonical element order everywhere
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<Pt> img_;
};

Perm parse_image_list(std::string_view text, std::size_t degree);  // "[2,1,3]" (1-based)

Perm perm_pow(const Perm& p, std::uint64_t n);

} // namespace loewy
