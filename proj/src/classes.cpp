#include "loewy/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace loewy {

namespace {

constexpr std::uint32_t kUnassigned = ~0u;

// result[x] = g[u[ginv[x]]], i.e. the conjugate g^-1 * u * g
std::vector<Perm::Pt> conj_images(const Perm& u, const Perm& g, const Perm& ginv) {
  const std::size_t n = u.degree();
  std::vector<Perm::Pt> r(n);
  for (std::size_t x = 0; x < n; ++x) r[x] = g[u[ginv[x]]];
  return r;
}

std::string letter_suffix(std::size_t idx) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + idx % 26));
    idx /= 26;
  } while (idx--);
  return s;
}

} // namespace

std::size_t ConjugacyClassSet::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("no conjugacy class labelled '" + label + "'");
}

ConjugacyClassSet conjugacy_classes(const EnumeratedGroup& g) {
  const std::size_t n = g.order();
  const auto& gens = g.small_generators();
  std::vector<Perm> ginvs;
  ginvs.reserve(gens.size());
  for (const auto& s : gens) ginvs.push_back(s.inverse());

  std::vector<std::uint32_t> class_of(n, kUnassigned);
  std::vector<std::uint32_t> seeds;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t seed = 0; seed < n; ++seed) {
    if (class_of[seed] != kUnassigned) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(seeds.size());
    seeds.push_back(seed);
    class_of[seed] = c;
    queue.clear();
    queue.push_back(seed);
    std::uint64_t size = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Perm u = g.element(queue[head]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        auto idx = g.index_of(Perm(conj_images(u, gens[s], ginvs[s])));
        if (!idx) throw std::logic_error("conjugacy_classes: conjugate escaped the group");
        if (class_of[*idx] == kUnassigned) {
          class_of[*idx] = c;
          queue.push_back(*idx);
          ++size;
        }
      }
    }
    sizes.push_back(size);
  }

  const std::size_t r = seeds.size();
  std::vector<std::uint64_t> orders(r);
  for (std::size_t c = 0; c < r; ++c) orders[c] = g.element(seeds[c]).order();

  // canonical order: identity class, then (element order, size, seed)
  std::vector<std::uint32_t> by_canon(r);
  std::iota(by_canon.begin(), by_canon.end(), 0u);
  std::sort(by_canon.begin(), by_canon.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return a == 0 && b != 0;
    return std::tuple(orders[a], sizes[a], seeds[a]) < std::tuple(orders[b], sizes[b], seeds[b]);
  });
  std::vector<std::uint32_t> new_of_old(r);
  for (std::uint32_t c = 0; c < r; ++c) new_of_old[by_canon[c]] = c;

  ConjugacyClassSet cls;
  cls.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) cls.class_of[i] = new_of_old[class_of[i]];
  cls.sizes.resize(r);
  cls.element_orders.resize(r);
  cls.rep_index.resize(r);
  for (std::uint32_t c = 0; c < r; ++c) {
    cls.sizes[c] = sizes[by_canon[c]];
    cls.element_orders[c] = orders[by_canon[c]];
    cls.rep_index[c] = seeds[by_canon[c]];
  }
  cls.inverse_class.resize(r);
  for (std::uint32_t c = 0; c < r; ++c) {
    auto idx = g.index_of(g.element(cls.rep_index[c]).inverse());
    cls.inverse_class[c] = cls.class_of[*idx];
  }
  cls.labels.resize(r);
  for (std::uint32_t c = 0; c < r; ++c) {
    std::size_t nth = 0;
    for (std::uint32_t d = 0; d < c; ++d)
      if (cls.element_orders[d] == cls.element_orders[c]) ++nth;
    cls.labels[c] = std::to_string(cls.element_orders[c]) + letter_suffix(nth);
  }
  return cls;
}

std::vector<std::uint32_t> class_members(const ConjugacyClassSet& cls, std::uint32_t c) {
  std::vector<std::uint32_t> m;
  for (std::uint32_t i = 0; i < cls.class_of.size(); ++i)
    if (cls.class_of[i] == c) m.push_back(i);
  return m;
}

std::vector<std::uint32_t> power_map(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                                     std::uint64_t n) {
  std::vector<std::uint32_t> pm(cls.count());
  for (std::uint32_t c = 0; c < cls.count(); ++c) {
    auto idx = g.index_of(perm_pow(g.element(cls.rep_index[c]), n % cls.element_orders[c]));
    pm[c] = cls.class_of[*idx];
  }
  return pm;
}

std::uint64_t class_mult_coeff_enum(const EnumeratedGroup& g, const ConjugacyClassSet& cls,
                                    std::uint32_t i, std::uint32_t j, std::uint32_t k,
                                    std::optional<std::uint32_t> z_element) {
  const std::size_t r = cls.count();
  if (i >= r || j >= r || k >= r) throw std::invalid_argument("class_mult_coeff: class index out of range");
  const std::uint32_t zi = z_element.value_or(cls.rep_index[k]);
  if (cls.class_of[zi] != k) throw std::invalid_argument("class_mult_coeff: z is not in class k");
  const Perm z = g.element(zi);

  std::uint64_t count = 0;
  if (cls.sizes[i] <= cls.sizes[j]) {
    // x in C_i contributes iff x^-1 z in C_j
    for (std::uint32_t xi : class_members(cls, i)) {
      const Perm x = g.element(xi);
      if (cls.class_of[*g.index_of(x.inverse().compose(z))] == j) ++count;
    }
  } else {
    // y in C_j contributes iff z y^-1 in C_i
    for (std::uint32_t yi : class_members(cls, j)) {
      const Perm y = g.element(yi);
      if (cls.class_of[*g.index_of(y.inverse().compose(z))] == i) ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> class_mult_table_enum(const EnumeratedGroup& g,
                                                 const ConjugacyClassSet& cls, unsigned threads) {
  const std::size_t r = cls.count();
  const std::size_t n = g.order();
  std::vector<std::uint64_t> cube(r * r * r, 0);
  if (threads == 0) threads = 1;

  // for fixed z in C_k:  #{u in C_a : u z in C_b}  =  a_{a^-1, b, k},
  // so a_{ijk} = count[inverse_class[i]][b = j]
  auto sweep = [&](std::size_t k_lo, std::size_t k_hi) {
    std::vector<std::uint64_t> count(r * r);
    for (std::size_t k = k_lo; k < k_hi; ++k) {
      std::fill(count.begin(), count.end(), 0);
      const Perm z = g.element(cls.rep_index[k]);
      for (std::size_t ui = 0; ui < n; ++ui) {
        const Perm u = g.element(ui);
        const auto uz = g.index_of(u.compose(z));
        ++count[cls.class_of[ui] * r + cls.class_of[*uz]];
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          cube[(k * r + i) * r + j] = count[cls.inverse_class[i] * r + j];
    }
  };

  if (threads == 1 || r <= 1) {
    sweep(0, r);
  } else {
    const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(r));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
      pool.emplace_back(sweep, r * w / t, r * (w + 1) / t);
    for (auto& th : pool) th.join();
  }
  return cube;
}

} // namespace loewy
