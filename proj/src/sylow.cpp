#include "loewy/sylow.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "loewy/util.hpp"

namespace loewy {

namespace {

std::uint32_t valuation_u64(std::uint64_t n, std::uint64_t p) {
  std::uint32_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// y^m for the p'-part m of ord(y); has order the full p-power part of ord(y)
std::optional<Perm> p_part(const Perm& y, std::uint64_t p) {
  std::uint64_t m = y.order();
  if (m % p) return std::nullopt;
  while (m % p == 0) m /= p;
  return perm_pow(y, m);
}

struct SubgroupOrbit {
  std::vector<std::vector<std::uint32_t>> subgroups;  // sorted g-element-index lists
  std::vector<Perm> conjugators;                      // base ^ conjugators[t] = subgroups[t]
};

SubgroupOrbit subgroup_orbit(const EnumeratedGroup& g, const EnumeratedGroup& sub) {
  std::vector<std::uint32_t> base;
  base.reserve(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) {
    auto idx = g.index_of(sub.element(i));
    if (!idx) throw std::invalid_argument("subgroup orbit: subgroup element outside the group");
    base.push_back(*idx);
  }
  std::sort(base.begin(), base.end());

  SubgroupOrbit orbit;
  std::set<std::vector<std::uint32_t>> seen;
  seen.insert(base);
  orbit.subgroups.push_back(base);
  orbit.conjugators.push_back(Perm::identity(g.degree()));
  const auto& gens = g.small_generators();
  std::vector<Perm> ginvs;
  for (const auto& s : gens) ginvs.push_back(s.inverse());

  for (std::size_t head = 0; head < orbit.subgroups.size(); ++head) {
    const auto cur = orbit.subgroups[head];        // copy: vector may reallocate
    const Perm curconj = orbit.conjugators[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::vector<std::uint32_t> img;
      img.reserve(cur.size());
      for (std::uint32_t idx : cur) {
        const Perm e = g.element(idx);
        std::vector<Perm::Pt> r(g.degree());
        for (std::size_t t = 0; t < g.degree(); ++t) r[t] = gens[s][e[ginvs[s][t]]];
        img.push_back(*g.index_of(Perm(std::move(r))));
      }
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) {
        orbit.subgroups.push_back(std::move(img));
        orbit.conjugators.push_back(curconj.compose(gens[s]));
      }
    }
  }
  return orbit;
}

} // namespace

EnumeratedGroup sylow_subgroup(const EnumeratedGroup& g, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  const std::uint32_t nu = valuation_u64(g.order(), p);
  const std::string name = "Syl" + std::to_string(p) + "(" + g.name() + ")";
  if (nu == 0)
    return EnumeratedGroup::from_sorted_elements(g.degree(), {Perm::identity(g.degree())}, name);
  std::uint64_t target = 1;
  for (std::uint32_t i = 0; i < nu; ++i) target *= p;

  EnumeratedGroup::Options opts;
  opts.name = name;
  opts.max_order = target;  // a p-subgroup cannot outgrow the Sylow order

  std::vector<Perm> gens;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (auto y = p_part(g.element(i), p)) {
      gens.push_back(std::move(*y));
      break;
    }
  }
  EnumeratedGroup sub = EnumeratedGroup::enumerate(gens, opts);
  while (sub.order() < target) {
    // a proper p-subgroup grows inside its normalizer: adjoin the p-part of
    // the first normalizing element whose p-part falls outside
    EnumeratedGroup nrm = normalizer(g, sub);
    bool extended = false;
    for (std::size_t i = 1; i < nrm.order(); ++i) {
      auto y = p_part(nrm.element(i), p);
      if (y && !sub.contains(*y)) {
        gens.push_back(std::move(*y));
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("sylow_subgroup: p-subgroup stopped growing");
    sub = EnumeratedGroup::enumerate(gens, opts);
  }
  return sub;
}

EnumeratedGroup normalizer(const EnumeratedGroup& g, const EnumeratedGroup& h) {
  if (h.degree() != g.degree()) throw std::invalid_argument("normalizer: degree mismatch");
  const auto& gens = h.small_generators();
  std::vector<Perm> elems;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Perm x = g.element(i);
    const Perm xinv = x.inverse();
    bool ok = true;
    for (const auto& s : gens) {
      std::vector<Perm::Pt> r(g.degree());
      for (std::size_t t = 0; t < g.degree(); ++t) r[t] = x[s[xinv[t]]];
      if (!h.contains(Perm(std::move(r)))) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(x);
  }
  return EnumeratedGroup::from_sorted_elements(g.degree(), elems, "N(" + h.name() + ")");
}

TIResult trivial_intersection_check(const EnumeratedGroup& g, const EnumeratedGroup& sub) {
  auto orbit = subgroup_orbit(g, sub);
  TIResult res;
  res.conjugate_count = orbit.subgroups.size();
  const auto& base = orbit.subgroups[0];
  for (std::size_t t = 1; t < orbit.subgroups.size(); ++t) {
    std::vector<std::uint32_t> common;
    std::set_intersection(base.begin(), base.end(), orbit.subgroups[t].begin(),
                          orbit.subgroups[t].end(), std::back_inserter(common));
    if (common.size() > res.max_intersection) {
      res.max_intersection = common.size();
      res.witness = std::pair(orbit.conjugators[t], g.element(common[1]));
    }
  }
  res.trivial = res.max_intersection <= 1;
  return res;
}

EnumeratedGroup p_core(const EnumeratedGroup& g, std::uint64_t p) {
  EnumeratedGroup sylow = sylow_subgroup(g, p);
  const std::string name = "O_" + std::to_string(p) + "(" + g.name() + ")";
  if (sylow.order() == 1) {
    sylow.set_name(name);
    return sylow;
  }
  auto orbit = subgroup_orbit(g, sylow);
  std::vector<std::uint32_t> inter = orbit.subgroups[0];
  for (std::size_t t = 1; t < orbit.subgroups.size() && inter.size() > 1; ++t) {
    std::vector<std::uint32_t> next;
    std::set_intersection(inter.begin(), inter.end(), orbit.subgroups[t].begin(),
                          orbit.subgroups[t].end(), std::back_inserter(next));
    inter = std::move(next);
  }
  std::vector<Perm> elems;
  elems.reserve(inter.size());
  for (std::uint32_t idx : inter) elems.push_back(g.element(idx));
  return EnumeratedGroup::from_sorted_elements(g.degree(), elems, name);
}

} // namespace loewy
