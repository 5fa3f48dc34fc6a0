#pragma once

// helpers shared by the unit tests and the acceptance runner

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "loewy/classes.hpp"
#include "loewy/gfq.hpp"
#include "loewy/linalg.hpp"
#include "loewy/sc_algebra.hpp"

namespace loewy::testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(LOEWY_SOURCE_DIR) + "/data/" + name;
}

inline Gfq::Elem fe(const Gfq& f, std::uint32_t v) {
  Gfq::Elem e(f.degree(), 0);
  e[0] = v % f.p();
  return e;
}

inline SCAlgebra::Vec vec_of(const Gfq& f, const std::vector<std::uint32_t>& coords) {
  SCAlgebra::Vec v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = fe(f, coords[i]);
  return v;
}

inline std::vector<mpz_class> mpz_sizes(const ConjugacyClassSet& cls) {
  std::vector<mpz_class> out;
  for (auto s : cls.sizes) out.emplace_back(static_cast<unsigned long>(s));
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// direct sum of truncated polynomial rings GF(p)[x]/(x^{n_i}), one summand
// per part, optionally conjugated by a deterministic random basis change so
// the distinguished basis carries no visible block structure
inline SCAlgebra tower_algebra(std::uint32_t p, const std::vector<std::size_t>& parts,
                               std::uint64_t seed) {
  std::size_t d = 0;
  std::vector<std::size_t> off;
  for (std::size_t n : parts) {
    off.push_back(d);
    d += n;
  }
  std::vector<std::uint32_t> cube(d * d * d, 0);
  std::vector<std::uint32_t> unit(d, 0);
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const std::size_t n = parts[pi], o = off[pi];
    unit[o] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t j2 = 0; j2 + j < n; ++j2) cube[((o + j) * d + o + j2) * d + (o + j + j2)] = 1;
  }
  if (seed) {
    const Gfp base(p);
    Mat<Gfp> t(base, d, d);
    std::uint64_t s = seed;
    for (;;) {
      for (auto& x : t.a) x = std::uint32_t(splitmix64(s) % p);
      Mat<Gfp> probe = t;
      if (rref(base, probe) == d) break;
    }
    Mat<Gfp> aug(base, d, 2 * d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug.at(r, c) = t.at(r, c);
      aug.at(r, d + r) = base.one();
    }
    rref(base, aug);
    Mat<Gfp> tinv(base, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) tinv.at(r, c) = aug.at(r, d + c);
    auto contract = [&](const std::vector<std::uint32_t>& in, const Mat<Gfp>& m,
                        int slot) {
      std::vector<std::uint32_t> out(d * d * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            std::uint64_t acc = 0;
            for (std::size_t u = 0; u < d; ++u) {
              std::uint64_t lhs, rhs;
              if (slot == 0) { lhs = m.at(i, u); rhs = in[(u * d + j) * d + k]; }
              else if (slot == 1) { lhs = m.at(j, u); rhs = in[(i * d + u) * d + k]; }
              else { lhs = in[(i * d + j) * d + u]; rhs = m.at(u, k); }
              acc = (acc + lhs * rhs) % p;
            }
            out[(i * d + j) * d + k] = std::uint32_t(acc);
          }
      return out;
    };
    cube = contract(cube, t, 0);
    cube = contract(cube, t, 1);
    cube = contract(cube, tinv, 2);
    std::vector<std::uint32_t> u2(d, 0);
    for (std::size_t c = 0; c < d; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc = (acc + std::uint64_t(unit[k]) * tinv.at(k, c)) % p;
      u2[c] = std::uint32_t(acc);
    }
    unit = std::move(u2);
  }
  Gfq f(p, 1);
  std::vector<Gfq::Elem> sc(cube.size());
  for (std::size_t i = 0; i < cube.size(); ++i) sc[i] = Gfq::Elem{cube[i]};
  SCAlgebra::Vec uv(d);
  for (std::size_t i = 0; i < d; ++i) uv[i] = Gfq::Elem{unit[i]};
  return SCAlgebra(std::move(f), d, std::move(sc), std::move(uv));
}

} // namespace loewy::testsupport
