#include "loewy/group.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "loewy/unitary.hpp"

namespace loewy {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes
    const auto& v = p.images();
    const unsigned char* d = reinterpret_cast<const unsigned char*>(v.data());
    std::size_t n = v.size() * sizeof(Perm::Pt);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
      h ^= d[i];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace

std::vector<Perm> closure(const std::vector<Perm>& generators, std::size_t degree,
                          std::uint64_t max_order) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  seen.insert(Perm::identity(degree));
  queue.push_back(Perm::identity(degree));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Perm x = queue[head];  // copy: queue may reallocate
    for (const auto& g : generators) {
      Perm y = x.compose(g);
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw std::runtime_error("group too large for enumeration (cap " + std::to_string(max_order) +
                                   ", enumerated at least " + std::to_string(seen.size()) + ")");
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Perm> small_generating_set(const std::vector<Perm>& sorted_elements, std::size_t degree) {
  const std::size_t n = sorted_elements.size();
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> have;
  have.insert(Perm::identity(degree));
  std::unordered_set<Perm, PermHash> target(sorted_elements.begin(), sorted_elements.end());
  while (have.size() < n) {
    const Perm* next = nullptr;
    for (const auto& e : sorted_elements)
      if (!have.contains(e)) {
        next = &e;
        break;
      }
    if (!next) throw std::runtime_error("small_generating_set: inconsistent element set");
    gens.push_back(*next);
    auto closed = closure(gens, degree, ~0ULL);
    if (closed.size() > n) throw std::runtime_error("small_generating_set: element set is not closed");
    for (auto& e : closed) {
      if (!target.contains(e)) throw std::runtime_error("small_generating_set: element set is not closed");
      have.insert(std::move(e));
    }
  }
  return gens;
}

void EnumeratedGroup::pack(const std::vector<Perm>& sorted_elements) {
  count_ = sorted_elements.size();
  if (!wide()) {
    pool8_.resize(count_ * degree_);
    for (std::size_t i = 0; i < count_; ++i)
      for (std::size_t j = 0; j < degree_; ++j) pool8_[i * degree_ + j] = static_cast<std::uint8_t>(sorted_elements[i][j]);
  } else {
    pool16_.resize(count_ * degree_);
    for (std::size_t i = 0; i < count_; ++i)
      for (std::size_t j = 0; j < degree_; ++j) pool16_[i * degree_ + j] = sorted_elements[i][j];
  }
}

EnumeratedGroup EnumeratedGroup::enumerate(std::vector<Perm> generators, const Options& opts) {
  if (generators.empty()) throw std::invalid_argument("enumerate: empty generator list");
  const std::size_t degree = generators[0].degree();
  if (degree == 0) throw std::invalid_argument("enumerate: degree must be positive");
  auto elements = closure(generators, degree, opts.max_order);

  EnumeratedGroup g;
  g.degree_ = degree;
  g.name_ = opts.name;
  g.generators_ = std::move(generators);
  g.pack(elements);

  // greedy subset of the provided generators that still generates
  std::unordered_set<Perm, PermHash> have;
  have.insert(Perm::identity(degree));
  for (const auto& gen : g.generators_) {
    if (have.contains(gen)) continue;
    g.small_generators_.push_back(gen);
    auto closed = closure(g.small_generators_, degree, opts.max_order);
    if (closed.size() == g.count_) break;
    have = std::unordered_set<Perm, PermHash>(closed.begin(), closed.end());
  }
  return g;
}

EnumeratedGroup EnumeratedGroup::from_sorted_elements(std::size_t degree,
                                                      const std::vector<Perm>& elements,
                                                      std::string name) {
  if (elements.empty() || !elements[0].is_identity())
    throw std::invalid_argument("from_sorted_elements: first element must be the identity");
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw std::invalid_argument("from_sorted_elements: elements must be sorted");
  EnumeratedGroup g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.pack(elements);
  g.small_generators_ = small_generating_set(elements, degree);  // asserts closure
  g.generators_ = g.small_generators_;
  if (g.generators_.empty()) g.generators_.push_back(Perm::identity(degree));
  return g;
}

Perm EnumeratedGroup::element(std::size_t i) const {
  std::vector<Perm::Pt> img(degree_);
  if (!wide())
    for (std::size_t j = 0; j < degree_; ++j) img[j] = pool8_[i * degree_ + j];
  else
    for (std::size_t j = 0; j < degree_; ++j) img[j] = pool16_[i * degree_ + j];
  return Perm(std::move(img));
}

namespace {

template <class PtT>
std::optional<std::uint32_t> pool_find(const PtT* pool, std::size_t count, std::size_t degree,
                                       const PtT* buf) {
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const PtT* row = pool + mid * degree;
    int cmp = 0;
    for (std::size_t j = 0; j < degree; ++j) {
      if (row[j] != buf[j]) {
        cmp = row[j] < buf[j] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return static_cast<std::uint32_t>(mid);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

} // namespace

std::optional<std::uint32_t> EnumeratedGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  if (!wide()) {
    std::vector<std::uint8_t> buf(degree_);
    for (std::size_t j = 0; j < degree_; ++j) buf[j] = static_cast<std::uint8_t>(p[j]);
    return pool_find(pool8_.data(), count_, degree_, buf.data());
  }
  return pool_find(pool16_.data(), count_, degree_, p.images().data());
}

std::vector<Perm> EnumeratedGroup::all_elements() const {
  std::vector<Perm> v;
  v.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) v.push_back(element(i));
  return v;
}

// ---- file input -------------------------------------------------------------

EnumeratedGroup group_from_file(const std::string& path, const EnumeratedGroup::Options& opts) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::string line, name;
  std::size_t degree = 0;
  std::optional<std::uint64_t> declared_order;
  std::vector<Perm> gens;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "degree") {
      if (degree) fail("duplicate degree line");
      if (!(ls >> degree) || degree == 0) fail("bad degree");
    } else if (tok == "order") {
      std::uint64_t m;
      if (!(ls >> m)) fail("bad order");
      declared_order = m;
    } else if (tok == "name") {
      std::getline(ls >> std::ws, name);
    } else {
      if (!degree) fail("generator before degree line");
      std::string rest = tok;
      std::string tail;
      std::getline(ls, tail);
      rest += tail;
      try {
        gens.push_back(rest[0] == '[' ? parse_image_list(rest, degree)
                                      : Perm::parse_cycles(rest, degree));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
  }
  if (!degree) throw std::invalid_argument(path + ": missing degree line");
  if (gens.empty()) throw std::invalid_argument(path + ": no generators");
  EnumeratedGroup::Options o = opts;
  if (o.name.empty()) o.name = name.empty() ? path : name;
  auto g = EnumeratedGroup::enumerate(std::move(gens), o);
  if (declared_order && g.order() != *declared_order)
    throw std::runtime_error(path + ": declared order " + std::to_string(*declared_order) +
                             " but enumeration found " + std::to_string(g.order()));
  return g;
}

// ---- builtin families --------------------------------------------------------

namespace {

EnumeratedGroup make_direct_product(const EnumeratedGroup& a, const EnumeratedGroup& b,
                                    const EnumeratedGroup::Options& opts, const std::string& name) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Perm::Pt> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Perm::Pt>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Perm::Pt> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Perm::Pt>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Perm::Pt>(da + g[i]);
    gens.emplace_back(std::move(img));
  }
  EnumeratedGroup::Options o = opts;
  o.name = name;
  return EnumeratedGroup::enumerate(std::move(gens), o);
}

} // namespace

EnumeratedGroup builtin_group(const std::string& spec, const EnumeratedGroup::Options& opts) {
  auto numeric_suffix = [&](std::size_t at) -> std::uint64_t {
    if (at >= spec.size()) throw std::invalid_argument("builtin_group: missing parameter in '" + spec + "'");
    std::uint64_t v = 0;
    for (std::size_t i = at; i < spec.size(); ++i) {
      if (spec[i] < '0' || spec[i] > '9')
        throw std::invalid_argument("builtin_group: bad parameter in '" + spec + "'");
      v = v * 10 + (spec[i] - '0');
    }
    return v;
  };
  EnumeratedGroup::Options o = opts;
  if (o.name.empty()) o.name = spec;

  if (spec.starts_with("prod(") && spec.back() == ')') {
    // split at the comma at nesting depth zero
    const std::string inner = spec.substr(5, spec.size() - 6);
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) throw std::invalid_argument("builtin_group: prod needs two factors");
    auto a = builtin_group(inner.substr(0, cut), opts);
    auto b = builtin_group(inner.substr(cut + 1), opts);
    return make_direct_product(a, b, opts, o.name);
  }
  if (spec.starts_with("sym")) {
    const auto n = numeric_suffix(3);
    if (n == 0 || n > 5000) throw std::invalid_argument("builtin_group: bad symmetric degree");
    std::vector<Perm> gens;
    if (n >= 2) {
      std::vector<Perm::Pt> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Perm::Pt>(i);
      std::swap(t[0], t[1]);
      gens.emplace_back(std::move(t));
      std::vector<Perm::Pt> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Perm::Pt>((i + 1) % n);
      gens.emplace_back(std::move(c));
    } else {
      gens.push_back(Perm::identity(1));
    }
    return EnumeratedGroup::enumerate(std::move(gens), o);
  }
  if (spec.starts_with("alt")) {
    const auto n = numeric_suffix(3);
    if (n < 3 || n > 5000) throw std::invalid_argument("builtin_group: alternating degree must be >= 3");
    std::vector<Perm> gens;
    gens.push_back(Perm::parse_cycles("(1,2,3)", n));
    if (n > 3) {
      std::string cyc = "(";
      // n odd: full n-cycle (even permutation); n even: (n-1)-cycle on 2..n
      const std::size_t lo = (n % 2 == 1) ? 1 : 2;
      for (std::size_t i = lo; i <= n; ++i) {
        if (i > lo) cyc += ",";
        cyc += std::to_string(i);
      }
      cyc += ")";
      gens.push_back(Perm::parse_cycles(cyc, n));
    }
    return EnumeratedGroup::enumerate(std::move(gens), o);
  }
  if (spec.starts_with("cyc")) {
    const auto n = numeric_suffix(3);
    if (n == 0) throw std::invalid_argument("builtin_group: bad cyclic order");
    std::vector<Perm::Pt> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Perm::Pt>((i + 1) % n);
    return EnumeratedGroup::enumerate({Perm(std::move(c))}, o);
  }
  if (spec.starts_with("dih")) {
    const auto n = numeric_suffix(3);  // group order
    if (n < 6 || n % 2) throw std::invalid_argument("builtin_group: dihedral parameter is the group order, even and >= 6");
    const std::size_t k = n / 2;
    std::vector<Perm::Pt> rot(k), refl(k);
    for (std::size_t i = 0; i < k; ++i) {
      rot[i] = static_cast<Perm::Pt>((i + 1) % k);
      refl[i] = static_cast<Perm::Pt>((k - i) % k);
    }
    return EnumeratedGroup::enumerate({Perm(std::move(rot)), Perm(std::move(refl))}, o);
  }
  if (spec.starts_with("psu3_")) {
    const auto q = numeric_suffix(5);
    auto gens = psu3_generators(static_cast<std::uint32_t>(q));
    return EnumeratedGroup::enumerate(std::move(gens), o);
  }
  throw std::invalid_argument("builtin_group: unknown family in '" + spec + "'");
}

EnumeratedGroup load_group(const std::string& spec, const EnumeratedGroup::Options& opts) {
  if (spec.starts_with("builtin:")) return builtin_group(spec.substr(8), opts);
  if (spec.starts_with("file:")) return group_from_file(spec.substr(5), opts);
  return group_from_file(spec, opts);
}

} // namespace loewy
