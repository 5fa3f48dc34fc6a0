#include "loewy/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "loewy/util.hpp"

namespace loewy {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  std::size_t line = 0;
  std::istringstream in(text);
  std::string ln;
  while (std::getline(in, ln)) {
    ++line;
    if (auto h = ln.find('#'); h != std::string::npos) ln.erase(h);
    std::istringstream ls(ln);
    std::string t;
    while (ls >> t) toks.push_back({t, line});
  }
  return toks;
}

struct TableParser {
  const std::string& origin;
  std::vector<Token> toks;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t line) const {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
  }
  [[noreturn]] void fail_here(const std::string& msg) const {
    fail(msg, pos < toks.size() ? toks[pos].line : (toks.empty() ? 1 : toks.back().line));
  }
  bool done() const { return pos == toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos].text;
  }
  std::string next(const char* what) {
    if (done()) fail_here(std::string("unexpected end of file, expected ") + what);
    return toks[pos++].text;
  }
  std::uint64_t next_u64(const char* what) {
    const std::string t = next(what);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      fail(std::string("expected ") + what + ", got '" + t + "'", toks[pos - 1].line);
    try {
      return std::stoull(t);
    } catch (...) {
      fail(std::string(what) + " out of range: '" + t + "'", toks[pos - 1].line);
    }
  }
  mpz_class next_mpz(const char* what) {
    const std::string t = next(what);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      fail(std::string("expected ") + what + ", got '" + t + "'", toks[pos - 1].line);
    return mpz_class(t);
  }

  CharacterTable parse() {
    CharacterTable t;
    bool have_order = false, have_exponent = false;
    std::uint64_t r = 0;
    while (!done() && peek() != "class") {
      const std::string key = next("header key");
      if (key == "name")
        t.name = next("group name");
      else if (key == "order") {
        t.order = next_mpz("group order");
        have_order = true;
      } else if (key == "exponent") {
        t.exponent = next_u64("group exponent");
        have_exponent = true;
      } else if (key == "nclasses")
        r = next_u64("class count");
      else
        fail("unknown header key '" + key + "'", toks[pos - 1].line);
    }
    if (!have_order) fail_here("missing 'order' header");
    if (!have_exponent) fail_here("missing 'exponent' header");
    if (r == 0) fail_here("missing or zero 'nclasses' header");

    t.sizes.resize(r);
    t.element_orders.resize(r);
    t.inverse_class.resize(r);
    t.labels.assign(r, "");
    std::vector<std::map<std::uint64_t, std::uint32_t>> pmaps(r);

    for (std::uint64_t c = 0; c < r; ++c) {
      if (next("'class'") != "class") fail("expected 'class' block", toks[pos - 1].line);
      if (next_u64("class index") != c + 1)
        fail("class blocks must appear in order 1.." + std::to_string(r), toks[pos - 1].line);
      bool have_size = false, have_eo = false, have_inv = false;
      while (!done() && peek() != "class" && peek() != "char") {
        const std::string key = next("class key");
        if (key == "label")
          t.labels[c] = next("label");
        else if (key == "size") {
          t.sizes[c] = next_mpz("class size");
          have_size = true;
        } else if (key == "element_order") {
          t.element_orders[c] = next_u64("element order");
          have_eo = true;
        } else if (key == "inverse") {
          const std::uint64_t v = next_u64("inverse class index");
          if (v < 1 || v > r) fail("inverse class index out of range", toks[pos - 1].line);
          t.inverse_class[c] = static_cast<std::uint32_t>(v - 1);
          have_inv = true;
        } else if (key == "powermap") {
          const std::uint64_t p = next_u64("powermap prime");
          const std::uint64_t v = next_u64("powermap class index");
          if (v < 1 || v > r) fail("powermap class index out of range", toks[pos - 1].line);
          if (!pmaps[c].emplace(p, static_cast<std::uint32_t>(v - 1)).second)
            fail("duplicate powermap prime " + std::to_string(p), toks[pos - 1].line);
        } else
          fail("unknown class key '" + key + "'", toks[pos - 1].line);
      }
      if (!have_size) fail_here("class " + std::to_string(c + 1) + " missing 'size'");
      if (!have_eo) fail_here("class " + std::to_string(c + 1) + " missing 'element_order'");
      if (!have_inv) fail_here("class " + std::to_string(c + 1) + " missing 'inverse'");
    }

    for (const auto& [p, v] : pmaps[0]) t.primes.push_back(p);
    for (std::uint64_t c = 0; c < r; ++c) {
      std::vector<std::uint64_t> ps;
      for (const auto& [p, v] : pmaps[c]) ps.push_back(p);
      if (ps != t.primes)
        fail_here("class " + std::to_string(c + 1) + " lists different powermap primes");
    }
    t.power_maps.assign(t.primes.size(), std::vector<std::uint32_t>(r));
    for (std::size_t ti = 0; ti < t.primes.size(); ++ti)
      for (std::uint64_t c = 0; c < r; ++c) t.power_maps[ti][c] = pmaps[c][t.primes[ti]];

    t.chars.resize(r);
    for (std::uint64_t x = 0; x < r; ++x) {
      if (next("'char'") != "char") fail("expected 'char' block", toks[pos - 1].line);
      if (next_u64("character index") != x + 1)
        fail("char blocks must appear in order 1.." + std::to_string(r), toks[pos - 1].line);
      t.chars[x].reserve(r);
      for (std::uint64_t c = 0; c < r; ++c) {
        const std::string v = next("character value");
        try {
          t.chars[x].push_back(Cyclotomic::parse(v));
        } catch (const std::invalid_argument& e) {
          fail(e.what(), toks[pos - 1].line);
        }
      }
    }
    if (!done()) fail_here("trailing content after the last character row");

    // auto-label any class left unlabelled: element order plus a counting letter
    for (std::uint64_t c = 0; c < r; ++c) {
      if (!t.labels[c].empty()) continue;
      std::size_t nth = 0;
      for (std::uint64_t d = 0; d < c; ++d)
        if (t.element_orders[d] == t.element_orders[c]) ++nth;
      std::string suffix;
      std::size_t idx = nth;
      do {
        suffix.insert(suffix.begin(), static_cast<char>('a' + idx % 26));
        idx /= 26;
      } while (idx--);
      t.labels[c] = std::to_string(t.element_orders[c]) + suffix;
    }
    return t;
  }
};

Cyclotomic scale(const mpz_class& c, const Cyclotomic& v) { return Cyclotomic(mpq_class(c)) * v; }

} // namespace

std::size_t CharacterTable::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("no class labelled '" + label + "' in table " + name);
}

CharacterTable parse_character_table_text(const std::string& text, const std::string& origin) {
  TableParser p{origin, tokenize(text)};
  CharacterTable t = p.parse();
  validate_character_table(t);
  return t;
}

CharacterTable parse_character_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open character table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_character_table_text(buf.str(), path);
}

void validate_character_table(const CharacterTable& t) {
  const std::size_t r = t.count();
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("invalid character table" + (t.name.empty() ? "" : " " + t.name) +
                             ": " + msg);
  };
  if (r == 0) fail("no classes");
  if (t.element_orders.size() != r || t.inverse_class.size() != r || t.labels.size() != r ||
      t.chars.size() != r)
    fail("field sizes disagree with the class count");
  for (const auto& row : t.chars)
    if (row.size() != r) fail("character row length disagrees with the class count");

  if (t.sizes[0] != 1) fail("first class must be the identity (size 1)");
  if (t.element_orders[0] != 1) fail("first class must have element order 1");
  mpz_class total = 0;
  for (const auto& s : t.sizes) {
    if (s < 1) fail("class sizes must be positive");
    total += s;
  }
  if (total != t.order) fail("class sizes sum to " + total.get_str() + ", not the group order");

  mpz_class lcm_orders = 1;
  for (auto eo : t.element_orders) {
    if (eo == 0) fail("element orders must be positive");
    mpz_lcm_ui(lcm_orders.get_mpz_t(), lcm_orders.get_mpz_t(), eo);
  }
  if (lcm_orders != mpz_class(static_cast<unsigned long>(t.exponent)))
    fail("exponent header is " + std::to_string(t.exponent) +
         " but element orders have lcm " + lcm_orders.get_str());

  {
    auto expect = prime_divisors(t.order);
    if (t.primes != expect) fail("powermap primes must be exactly the primes dividing the order");
    for (const auto& pm : t.power_maps)
      if (pm.size() != r) fail("powermap length disagrees with the class count");
  }

  for (std::size_t c = 0; c < r; ++c) {
    const std::uint32_t ic = t.inverse_class[c];
    if (ic >= r) fail("inverse class index out of range");
    if (t.inverse_class[ic] != c)
      fail("inverse map is not an involution at class " + std::to_string(c + 1));
    if (t.element_orders[ic] != t.element_orders[c] || t.sizes[ic] != t.sizes[c])
      fail("inverse class " + std::to_string(ic + 1) + " disagrees with class " +
           std::to_string(c + 1) + " in size or element order");
  }
  for (std::size_t ti = 0; ti < t.primes.size(); ++ti) {
    const std::uint64_t p = t.primes[ti];
    if (t.power_maps[ti][0] != 0) fail("powermap must fix the identity class");
    for (std::size_t c = 0; c < r; ++c) {
      const std::uint32_t pc = t.power_maps[ti][c];
      if (pc >= r) fail("powermap class index out of range");
      const std::uint64_t eo = t.element_orders[c];
      const std::uint64_t expect = eo % p == 0 ? eo / p : eo;
      if (t.element_orders[pc] != expect)
        fail("powermap for prime " + std::to_string(p) + " sends class " + std::to_string(c + 1) +
             " (order " + std::to_string(eo) + ") to a class of order " +
             std::to_string(t.element_orders[pc]));
    }
  }
  {
    auto sorted = t.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("class labels are not unique");
  }

  const Cyclotomic one{1L};
  for (std::size_t c = 0; c < r; ++c)
    if (t.chars[0][c] != one) fail("first character must be trivial");

  mpz_class degsum = 0;
  for (std::size_t x = 0; x < r; ++x) {
    const Cyclotomic& d = t.chars[x][0];
    if (!d.is_integer() || d.rational_value() < 1)
      fail("character " + std::to_string(x + 1) + " has an invalid degree");
    degsum += d.rational_value().get_num() * d.rational_value().get_num();
  }
  if (degsum != t.order) fail("character degrees have square sum " + degsum.get_str());

  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t c = 0; c < r; ++c) {
      if (t.exponent % t.chars[x][c].conductor())
        fail("value at character " + std::to_string(x + 1) + ", class " + std::to_string(c + 1) +
             " has conductor outside the group exponent");
      if (t.chars[x][t.inverse_class[c]] != t.chars[x][c].conj())
        fail("character " + std::to_string(x + 1) + " is not conjugate-symmetric at class " +
             std::to_string(c + 1));
    }

  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < r; ++c)
        sum = sum + scale(t.sizes[c], t.chars[x][c] * t.chars[y][c].conj());
      const Cyclotomic expect = x == y ? Cyclotomic(mpq_class(t.order)) : Cyclotomic();
      if (sum != expect)
        fail("row orthogonality fails for characters " + std::to_string(x + 1) + " and " +
             std::to_string(y + 1));
    }

  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic sum;
      for (std::size_t x = 0; x < r; ++x) sum = sum + t.chars[x][c] * t.chars[x][d].conj();
      Cyclotomic expect;
      if (c == d) {
        mpq_class v(t.order, t.sizes[c]);
        v.canonicalize();
        if (v.get_den() != 1) fail("class size does not divide the group order");
        expect = Cyclotomic(v);
      }
      if (sum != expect)
        fail("column orthogonality fails for classes " + std::to_string(c + 1) + " and " +
             std::to_string(d + 1));
    }
}

std::string serialize_character_table(const CharacterTable& t) {
  std::ostringstream out;
  if (!t.name.empty()) out << "name " << t.name << "\n";
  out << "order " << t.order.get_str() << "\n";
  out << "exponent " << t.exponent << "\n";
  out << "nclasses " << t.count() << "\n";
  for (std::size_t c = 0; c < t.count(); ++c) {
    out << "class " << c + 1 << "\n";
    out << "  label " << t.labels[c] << "\n";
    out << "  size " << t.sizes[c].get_str() << "\n";
    out << "  element_order " << t.element_orders[c] << "\n";
    out << "  inverse " << t.inverse_class[c] + 1 << "\n";
    for (std::size_t ti = 0; ti < t.primes.size(); ++ti)
      out << "  powermap " << t.primes[ti] << " " << t.power_maps[ti][c] + 1 << "\n";
  }
  for (std::size_t x = 0; x < t.count(); ++x) {
    out << "char " << x + 1 << "\n ";
    for (std::size_t c = 0; c < t.count(); ++c) out << " " << t.chars[x][c].to_string();
    out << "\n";
  }
  return out.str();
}

mpz_class burnside_coeff(const CharacterTable& t, std::uint32_t i, std::uint32_t j,
                         std::uint32_t k) {
  const std::size_t r = t.count();
  if (i >= r || j >= r || k >= r) throw std::invalid_argument("burnside_coeff: class index out of range");
  Cyclotomic sum;
  for (std::size_t x = 0; x < r; ++x) {
    mpq_class inv_deg(1, t.chars[x][0].rational_value().get_num());
    inv_deg.canonicalize();
    sum = sum + Cyclotomic(inv_deg) * t.chars[x][i] * t.chars[x][j] * t.chars[x][t.inverse_class[k]];
  }
  if (!sum.is_rational())
    throw std::runtime_error("character table inconsistent: irrational class coefficient at (" +
                             std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ")");
  mpq_class a = sum.rational_value() * mpq_class(t.sizes[i] * t.sizes[j], t.order);
  a.canonicalize();
  if (a.get_den() != 1 || a < 0)
    throw std::runtime_error("character table inconsistent: class coefficient at (" +
                             std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ") is " + a.get_str());
  return a.get_num();
}

std::vector<mpz_class> class_mult_table_burnside(const CharacterTable& t, unsigned threads) {
  const std::size_t r = t.count();
  std::vector<mpz_class> cube(r * r * r);
  if (threads == 0) threads = 1;

  // flattened upper-triangle pairs (i <= j); a_{ijk} = a_{jik} by commutativity
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(r * (r + 1) / 2);
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = i; j < r; ++j) pairs.emplace_back(i, j);

  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t pi = lo; pi < hi; ++pi) {
      const auto [i, j] = pairs[pi];
      // chi(g_i) chi(g_j) / chi(1), reused across every k
      std::vector<Cyclotomic> pij(r);
      for (std::size_t x = 0; x < r; ++x) {
        mpq_class inv_deg(1, t.chars[x][0].rational_value().get_num());
        inv_deg.canonicalize();
        pij[x] = Cyclotomic(inv_deg) * t.chars[x][i] * t.chars[x][j];
      }
      mpq_class front(t.sizes[i] * t.sizes[j], t.order);
      front.canonicalize();
      for (std::uint32_t k = 0; k < r; ++k) {
        Cyclotomic sum;
        for (std::size_t x = 0; x < r; ++x) sum = sum + pij[x] * t.chars[x][t.inverse_class[k]];
        if (!sum.is_rational())
          throw std::runtime_error("character table inconsistent: irrational class coefficient");
        mpq_class a = sum.rational_value() * front;
        a.canonicalize();
        if (a.get_den() != 1 || a < 0)
          throw std::runtime_error("character table inconsistent: class coefficient at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                   std::to_string(k + 1) + ") is " + a.get_str());
        cube[(static_cast<std::size_t>(k) * r + i) * r + j] = a.get_num();
        if (i != j) cube[(static_cast<std::size_t>(k) * r + j) * r + i] = a.get_num();
      }
    }
  };

  if (threads == 1 || pairs.size() <= 1) {
    run(0, pairs.size());
  } else {
    const unsigned w = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned q = 0; q < w; ++q)
      pool.emplace_back([&, q] {
        try {
          run(pairs.size() * q / w, pairs.size() * (q + 1) / w);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  return cube;
}

} // namespace loewy
