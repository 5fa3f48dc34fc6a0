#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewy/chartab.hpp"
#include "loewy/classes.hpp"
#include "loewy/cyclotomic.hpp"
#include "loewy/group.hpp"
#include "loewy/util.hpp"

using namespace loewy;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(LOEWY_SOURCE_DIR) + "/" + rel;
}

Cyclotomic cyc(const char* text) { return Cyclotomic::parse(text); }

std::string error_of(const char* text) {
  try {
    Cyclotomic::parse(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

// the table of data/s3.ctbl inlined, with an optional single edit, so tests
// can corrupt one field at a time
std::string s3_text(const std::string& replace_from = "", const std::string& replace_to = "") {
  std::string t =
      "name sym3\norder 6\nexponent 6\nnclasses 3\n"                                         // 1-4
      "class 1\n label 1a\n size 1\n element_order 1\n inverse 1\n"                          // 5-9
      " powermap 2 1\n powermap 3 1\n"                                                       // 10-11
      "class 2\n label 2a\n size 3\n element_order 2\n inverse 2\n"                          // 12-16
      " powermap 2 1\n powermap 3 2\n"                                                       // 17-18
      "class 3\n label 3a\n size 2\n element_order 3\n inverse 3\n"                          // 19-23
      " powermap 2 3\n powermap 3 1\n"                                                       // 24-25
      "char 1\n 1 1 1\nchar 2\n 1 -1 1\nchar 3\n 2 0 -1\n";                                  // 26-31
  if (!replace_from.empty()) {
    const auto at = t.find(replace_from);
    REQUIRE(at != std::string::npos);
    t.replace(at, replace_from.size(), replace_to);
  }
  return t;
}

} // namespace

TEST_CASE("cyclotomic rational values") {
  CHECK(Cyclotomic().is_zero());
  CHECK(Cyclotomic().is_rational());
  CHECK(Cyclotomic().rational_value() == 0);
  CHECK(Cyclotomic().conductor() == 1);
  CHECK(Cyclotomic().to_string() == "0");

  const Cyclotomic q(mpq_class(-7, 3));
  CHECK(q.is_rational());
  CHECK_FALSE(q.is_integer());
  CHECK(q.rational_value() == mpq_class(-7, 3));
  CHECK(q.to_string() == "-7/3");

  CHECK(Cyclotomic(2L).is_integer());
  CHECK((Cyclotomic(mpq_class(1, 2)) + Cyclotomic(mpq_class(1, 3))).rational_value() ==
        mpq_class(5, 6));
  CHECK((Cyclotomic(3L) * Cyclotomic(mpq_class(1, 3))).rational_value() == 1);
  CHECK((-Cyclotomic(5L)).rational_value() == -5);
  CHECK(Cyclotomic(4L).conj() == Cyclotomic(4L));
}

TEST_CASE("cyclotomic root identities") {
  const Cyclotomic one(1L);

  CHECK(Cyclotomic::root_of_unity(1, 0) == one);
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1L));

  // 1 + z3 + z3^2 = 0
  Cyclotomic s = one + Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  CHECK(s.is_zero());

  // z4^2 = -1
  const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(i4 * i4 == Cyclotomic(-1L));

  // sum of all primitive fifth roots = -1
  Cyclotomic f;
  for (std::uint64_t k = 1; k <= 4; ++k) f = f + Cyclotomic::root_of_unity(5, k);
  CHECK(f == Cyclotomic(-1L));

  // conjugation inverts roots
  CHECK(Cyclotomic::root_of_unity(5, 1).conj() == Cyclotomic::root_of_unity(5, 4));
  CHECK(Cyclotomic::root_of_unity(7, 3).conj() == Cyclotomic::root_of_unity(7, 4));

  // the same root written with different conductors
  CHECK(Cyclotomic::root_of_unity(8, 2) == i4);
  CHECK(Cyclotomic::root_of_unity(8, 1) * Cyclotomic::root_of_unity(8, 1) == i4);
  CHECK(Cyclotomic::root_of_unity(12, 4) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(12, 3) == i4);
  CHECK(Cyclotomic::root_of_unity(9, 3) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(45, 9) == Cyclotomic::root_of_unity(5, 1));
  CHECK(Cyclotomic::root_of_unity(6, 1) == -Cyclotomic::root_of_unity(3, 2));
  CHECK(Cyclotomic::root_of_unity(6, 1).conductor() == 3);

  // exponent arithmetic across a sample of conductors
  for (std::uint64_t n : {4ULL, 5ULL, 8ULL, 9ULL, 12ULL, 15ULL, 30ULL})
    for (std::uint64_t a = 0; a < n; a += 3)
      for (std::uint64_t b = 0; b < n; b += 5) {
        CHECK(Cyclotomic::root_of_unity(n, a) * Cyclotomic::root_of_unity(n, b) ==
              Cyclotomic::root_of_unity(n, (a + b) % n));
        CHECK(Cyclotomic::root_of_unity(n, a).conj() ==
              Cyclotomic::root_of_unity(n, (n - a) % n));
      }

  // many-component conductor: z * conj(z) = 1; a conductor 2m with m odd
  // canonicalizes to m, since -1 absorbs the order-2 component
  const std::uint64_t big = 2ULL * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29;
  const Cyclotomic z = Cyclotomic::root_of_unity(big, 1);
  CHECK(z.conductor() == big / 2);
  CHECK(z * z.conj() == one);
  CHECK(Cyclotomic::root_of_unity(10, 1) == -Cyclotomic::root_of_unity(5, 3));

  CHECK_THROWS_WITH_AS(Cyclotomic::root_of_unity(0, 0),
                       "root_of_unity: conductor must be positive", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Cyclotomic::root_of_unity(1ULL << 33, 1),
                       "root_of_unity: prime-power component too large", std::invalid_argument);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(5, 1).rational_value(), std::domain_error);
}

TEST_CASE("cyclotomic golden ratio arithmetic") {
  const Cyclotomic plus = cyc("1+z(5)+z(5)^4");   // (1+sqrt5)/2
  const Cyclotomic minus = cyc("-z(5)-z(5)^4");   // (1-sqrt5)/2
  CHECK(plus + minus == Cyclotomic(1L));
  CHECK(plus * minus == Cyclotomic(-1L));
  CHECK(plus.conj() == plus);

  const Cyclotomic sqrt5 = cyc("1+2*z(5)+2*z(5)^4");
  CHECK(sqrt5 * sqrt5 == Cyclotomic(5L));
  CHECK(plus - minus == sqrt5);

  // (1+z5)(1+z5^4) = 2 + z5 + z5^4
  CHECK((Cyclotomic(1L) + cyc("z(5)")) * (Cyclotomic(1L) + cyc("z(5)^4")) ==
        cyc("2+z(5)+z(5)^4"));

  // adding and removing a foreign conductor returns to the original value
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  const Cyclotomic mixed = z3 + Cyclotomic::root_of_unity(4, 1);
  CHECK(mixed.conductor() == 12);
  CHECK(mixed - Cyclotomic::root_of_unity(4, 1) == z3);
  CHECK((mixed - Cyclotomic::root_of_unity(4, 1)).conductor() == 3);
}

TEST_CASE("cyclotomic text form") {
  CHECK(cyc("0").is_zero());
  CHECK(cyc("12") == Cyclotomic(12L));
  CHECK(cyc("-3/6") == Cyclotomic(mpq_class(-1, 2)));
  CHECK(cyc("z(5)") == Cyclotomic::root_of_unity(5, 1));
  CHECK(cyc("-z(7)^3") == -Cyclotomic::root_of_unity(7, 3));
  CHECK(cyc("z(15)") == Cyclotomic::root_of_unity(3, 2) * Cyclotomic::root_of_unity(5, 2));
  CHECK(cyc("1/2-3/2*z(8)^3") ==
        Cyclotomic(mpq_class(1, 2)) -
            Cyclotomic(mpq_class(3, 2)) * Cyclotomic::root_of_unity(8, 3));
  CHECK(cyc("z(6)") == Cyclotomic::root_of_unity(6, 1));

  // canonical output rewrites exponents into the power basis (0..phi(q)-1)
  CHECK(cyc("1+z(5)+z(5)^4").to_string() == "-z(5)^2-z(5)^3");
  CHECK(cyc("-z(5)-z(5)^4").to_string() == "1+z(5)^2+z(5)^3");
  CHECK(Cyclotomic::root_of_unity(6, 1).to_string() == "1+z(3)");
  CHECK(Cyclotomic::root_of_unity(15, 1).to_string() == "-z(15)^6-z(15)^11");
  CHECK(cyc("2/2").to_string() == "1");
  CHECK((Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 3)).to_string() ==
        "z(8)+z(8)^3");

  // parse(to_string) is the identity on every root of a sample of conductors
  for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 6ULL, 7ULL, 8ULL, 9ULL, 10ULL, 11ULL,
                          12ULL, 16ULL, 24ULL, 30ULL, 45ULL})
    for (std::uint64_t e = 0; e < n; ++e) {
      const Cyclotomic v = Cyclotomic::root_of_unity(n, e);
      CHECK(Cyclotomic::parse(v.to_string()) == v);
    }

  // and on composite values
  for (const char* s : {"1/2+3/2*z(8)^3", "-1+2*z(5)^3", "z(12)^5-z(12)^7", "7/3"}) {
    const Cyclotomic v = cyc(s);
    CHECK(Cyclotomic::parse(v.to_string()) == v);
  }
}

TEST_CASE("cyclotomic parse errors") {
  CHECK_THROWS_WITH_AS(Cyclotomic::parse(""), "bad cyclotomic value: empty",
                       std::invalid_argument);
  for (const char* bad : {"z", "z5", "z(", "z(5", "z(5)^", "z(0)", "1//2", "1/0", "2*", "2*3",
                          "1+", "+1", "z(5)z(5)", "1 2", "(1)", "z(99999999999999999999)"})
    CHECK_THROWS_AS(Cyclotomic::parse(bad), std::invalid_argument);
  CHECK(error_of("z(5)^") == "bad cyclotomic value 'z(5)^' at offset 5: expected a number");
  CHECK(error_of("1/0") == "bad cyclotomic value '1/0' at offset 3: zero denominator");
  CHECK(error_of("2*3") == "bad cyclotomic value '2*3' at offset 2: expected z(...) after '*'");
}

TEST_CASE("character table fixtures parse and validate") {
  const CharacterTable s3 = parse_character_table(data_path("data/s3.ctbl"));
  CHECK(s3.name == "sym3");
  CHECK(s3.order == 6);
  CHECK(s3.exponent == 6);
  CHECK(s3.count() == 3);
  CHECK(s3.labels == std::vector<std::string>{"1a", "2a", "3a"});
  CHECK(s3.sizes == std::vector<mpz_class>{1, 3, 2});
  CHECK(s3.element_orders == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(s3.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(s3.power_maps[0] == std::vector<std::uint32_t>{0, 0, 2});
  CHECK(s3.power_maps[1] == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(s3.index_of_label("3a") == 2);
  CHECK_THROWS_WITH_AS(s3.index_of_label("9z"), "no class labelled '9z' in table sym3",
                       std::invalid_argument);

  const CharacterTable a5 = parse_character_table(data_path("data/a5.ctbl"));
  CHECK(a5.count() == 5);
  // labels were omitted in the file and assigned automatically
  CHECK(a5.labels == std::vector<std::string>{"1a", "2a", "3a", "5a", "5b"});
  const std::vector<long> degrees{1, 3, 3, 4, 5};
  for (std::size_t x = 0; x < 5; ++x)
    CHECK(a5.chars[x][0] == Cyclotomic(degrees[x]));
  CHECK(a5.chars[1][3] == cyc("1+z(5)+z(5)^4"));
  CHECK(a5.chars[1][4] == cyc("-z(5)-z(5)^4"));

  CHECK(parse_character_table(data_path("data/s4.ctbl")).count() == 5);
  CHECK(parse_character_table(data_path("data/d8.ctbl")).count() == 5);

  CHECK_THROWS_WITH_AS(parse_character_table(data_path("data/no_such.ctbl")),
                       doctest::Contains("cannot open character table file"),
                       std::invalid_argument);
}

TEST_CASE("character table of a trivial group") {
  const CharacterTable t = parse_character_table_text(
      "order 1\nexponent 1\nnclasses 1\nclass 1\n size 1\n element_order 1\n inverse 1\n"
      "char 1\n 1\n",
      "trivial");
  CHECK(t.name.empty());
  CHECK(t.primes.empty());
  CHECK(t.labels == std::vector<std::string>{"1a"});
  CHECK(burnside_coeff(t, 0, 0, 0) == 1);
  const std::string s = serialize_character_table(t);
  CHECK(serialize_character_table(parse_character_table_text(s, "again")) == s);
}

TEST_CASE("character table with complex values") {
  // cyclic group of order 5: chi_j(c^k) = z5^(jk), classes are not self-inverse
  const std::string c5 =
      "name cyc5\norder 5\nexponent 5\nnclasses 5\n"
      "class 1\n size 1\n element_order 1\n inverse 1\n powermap 5 1\n"
      "class 2\n size 1\n element_order 5\n inverse 5\n powermap 5 1\n"
      "class 3\n size 1\n element_order 5\n inverse 4\n powermap 5 1\n"
      "class 4\n size 1\n element_order 5\n inverse 3\n powermap 5 1\n"
      "class 5\n size 1\n element_order 5\n inverse 2\n powermap 5 1\n"
      "char 1\n 1 1 1 1 1\n"
      "char 2\n 1 z(5) z(5)^2 z(5)^3 z(5)^4\n"
      "char 3\n 1 z(5)^2 z(5)^4 z(5) z(5)^3\n"
      "char 4\n 1 z(5)^3 z(5) z(5)^4 z(5)^2\n"
      "char 5\n 1 z(5)^4 z(5)^3 z(5)^2 z(5)\n";
  const CharacterTable t = parse_character_table_text(c5, "c5");
  CHECK(t.labels == std::vector<std::string>{"1a", "5a", "5b", "5c", "5d"});

  // class k (0-based) holds c^k, so class products are exponent sums
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = 0; j < 5; ++j)
      for (std::uint32_t k = 0; k < 5; ++k)
        CHECK(burnside_coeff(t, i, j, k) == ((i + j) % 5 == k ? 1 : 0));

  // breaking conjugate symmetry is caught
  const auto at = c5.find("char 2\n 1 z(5) ");
  REQUIRE(at != std::string::npos);
  std::string bad = c5;
  bad.replace(at + 10, 4, "z(5)^2");  // chi_2(5a) no longer conjugate to chi_2(5d)
  CHECK_THROWS_WITH_AS(parse_character_table_text(bad, "c5"),
                       doctest::Contains("not conjugate-symmetric"), std::runtime_error);
}

TEST_CASE("character table syntax errors carry file and line") {
  auto parse_err = [](const std::string& text) {
    try {
      parse_character_table_text(text, "buf");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(parse_err("exponent 6\nnclasses 3\n") == "buf:2: missing 'order' header");
  CHECK(parse_err("order 6\nnclasses 3\n") == "buf:2: missing 'exponent' header");
  CHECK(parse_err("order 6\nexponent 6\n") == "buf:2: missing or zero 'nclasses' header");
  CHECK(parse_err("shape 6\n") == "buf:1: unknown header key 'shape'");
  CHECK(parse_err("order x\n") == "buf:1: expected group order, got 'x'");
  CHECK(parse_err(s3_text("class 2", "class 7")) ==
        "buf:12: class blocks must appear in order 1..3");
  CHECK(parse_err(s3_text("powermap 3 2", "powermap 3 2\n powermap 3 2")) ==
        "buf:19: duplicate powermap prime 3");
  CHECK(parse_err(s3_text(" size 3\n", "")) == "buf:18: class 2 missing 'size'");
  CHECK(parse_err(s3_text("inverse 3", "inverse 9")) ==
        "buf:23: inverse class index out of range");
  CHECK(parse_err(s3_text("label 2a", "flavor 2a")) == "buf:13: unknown class key 'flavor'");
  CHECK(parse_err(s3_text("2 0 -1", "2 0 -1 extra")) ==
        "buf:31: trailing content after the last character row");
  CHECK(parse_err(s3_text("2 0 -1", "2 0")) ==
        "buf:31: unexpected end of file, expected character value");
  CHECK(parse_err(s3_text("char 3", "char 9")) ==
        "buf:30: char blocks must appear in order 1..3");
  // a malformed value is reported at its own line
  CHECK(parse_err(s3_text("1 -1 1", "1 -Q 1")) ==
        "buf:29: bad cyclotomic value '-Q' at offset 1: expected a number");
}

TEST_CASE("character table validation rejects inconsistent data") {
  auto valid_err = [](const std::string& text) {
    try {
      parse_character_table_text(text, "buf");
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  auto has = [](const std::string& msg, const char* part) {
    CAPTURE(msg);
    CHECK(msg.find(part) != std::string::npos);
  };

  has(valid_err(s3_text("order 6", "order 7")), "class sizes sum to 6");
  has(valid_err(s3_text("exponent 6", "exponent 12")), "exponent header is 12");
  has(valid_err(s3_text("size 1\n element_order 1", "size 1\n element_order 2")),
      "first class");
  has(valid_err(s3_text(" powermap 2 1\n powermap 3 2", " powermap 2 3\n powermap 3 2")),
      "powermap for prime 2");
  has(valid_err(s3_text("label 3a", "label 2a")), "labels are not unique");
  has(valid_err(s3_text("char 1\n 1 1 1\nchar 2\n 1 -1 1", "char 1\n 1 -1 1\nchar 2\n 1 1 1")),
      "first character must be trivial");
  has(valid_err(s3_text("char 2\n 1 -1 1", "char 2\n 0 0 0")), "invalid degree");
  has(valid_err(s3_text("char 3\n 2 0 -1", "char 3\n 3 0 -1")), "square sum");
  has(valid_err(s3_text("char 3\n 2 0 -1", "char 3\n 2 z(4) -1")),
      "conductor outside the group exponent");
  // a single corrupted value breaks orthogonality
  has(valid_err(s3_text("char 3\n 2 0 -1", "char 3\n 2 0 1")), "row orthogonality");

  // inverse map variations on the cyclic group of order 3
  auto c3_table = [](const char* inv2, const char* inv3) {
    return std::string("order 3\nexponent 3\nnclasses 3\n") +
           "class 1\n size 1\n element_order 1\n inverse 1\n powermap 3 1\n" +
           "class 2\n size 1\n element_order 3\n inverse " + inv2 + "\n powermap 3 1\n" +
           "class 3\n size 1\n element_order 3\n inverse " + inv3 + "\n powermap 3 1\n" +
           "char 1\n 1 1 1\nchar 2\n 1 z(3) z(3)^2\nchar 3\n 1 z(3)^2 z(3)\n";
  };
  CHECK(parse_character_table_text(c3_table("3", "2"), "c3").count() == 3);
  has(valid_err(c3_table("2", "3")), "not conjugate-symmetric");
  has(valid_err(c3_table("3", "3")), "involution");

  // power maps for a prime not dividing the order are rejected
  std::string with5 = s3_text();
  auto patch = [&](const std::string& from, const std::string& to) {
    const auto at = with5.find(from);
    REQUIRE(at != std::string::npos);
    with5.replace(at, from.size(), to);
  };
  patch(" powermap 3 1\nclass 2", " powermap 3 1\n powermap 5 1\nclass 2");
  patch(" powermap 3 2", " powermap 3 2\n powermap 5 2");
  patch(" powermap 3 1\nchar 1", " powermap 3 1\n powermap 5 3\nchar 1");
  has(valid_err(with5), "primes dividing the order");
}

TEST_CASE("character table serialization round trip") {
  for (const char* rel : {"data/s3.ctbl", "data/s4.ctbl", "data/a5.ctbl", "data/d8.ctbl"}) {
    CAPTURE(rel);
    const CharacterTable t = parse_character_table(data_path(rel));
    const std::string s = serialize_character_table(t);
    const CharacterTable t2 = parse_character_table_text(s, "serialized");
    CHECK(serialize_character_table(t2) == s);
    REQUIRE(t2.count() == t.count());
    CHECK(t2.name == t.name);
    CHECK(t2.order == t.order);
    CHECK(t2.exponent == t.exponent);
    CHECK(t2.labels == t.labels);
    CHECK(t2.sizes == t.sizes);
    CHECK(t2.element_orders == t.element_orders);
    CHECK(t2.inverse_class == t.inverse_class);
    CHECK(t2.primes == t.primes);
    CHECK(t2.power_maps == t.power_maps);
    for (std::size_t x = 0; x < t.count(); ++x)
      for (std::size_t c = 0; c < t.count(); ++c) CHECK(t2.chars[x][c] == t.chars[x][c]);
  }
}

TEST_CASE("class coefficients from characters match direct counting") {
  const std::pair<const char*, const char*> cases[] = {
      {"sym3", "data/s3.ctbl"},
      {"sym4", "data/s4.ctbl"},
      {"alt5", "data/a5.ctbl"},
      {"dih8", "data/d8.ctbl"},
  };
  for (const auto& [spec, rel] : cases) {
    CAPTURE(spec);
    const EnumeratedGroup g = builtin_group(spec);
    const ConjugacyClassSet cls = conjugacy_classes(g);
    const CharacterTable t = parse_character_table(data_path(rel));
    const std::size_t r = cls.count();

    // the table's class data must agree with enumeration, index by index
    REQUIRE(t.count() == r);
    CHECK(t.order == mpz_class(static_cast<unsigned long>(g.order())));
    CHECK(t.labels == cls.labels);
    CHECK(t.element_orders == cls.element_orders);
    CHECK(t.inverse_class == cls.inverse_class);
    for (std::size_t c = 0; c < r; ++c)
      CHECK(t.sizes[c] == mpz_class(static_cast<unsigned long>(cls.sizes[c])));
    std::uint64_t exponent = 1;
    for (auto eo : cls.element_orders) exponent = lcm_u64(exponent, eo);
    CHECK(t.exponent == exponent);
    for (std::size_t ti = 0; ti < t.primes.size(); ++ti)
      CHECK(t.power_maps[ti] == power_map(g, cls, static_cast<unsigned>(t.primes[ti])));

    // multiplying by the identity class is trivial
    for (std::uint32_t j = 0; j < r; ++j)
      for (std::uint32_t k = 0; k < r; ++k)
        CHECK(burnside_coeff(t, 0, j, k) == (j == k ? 1 : 0));

    // the full coefficient cube agrees with counting in the group
    const std::vector<std::uint64_t> counted = class_mult_table_enum(g, cls);
    const std::vector<mpz_class> fromchars = class_mult_table_burnside(t);
    REQUIRE(counted.size() == fromchars.size());
    for (std::size_t at = 0; at < counted.size(); ++at)
      CHECK(fromchars[at] == static_cast<unsigned long>(counted[at]));

    CHECK(class_mult_table_burnside(t, 3) == fromchars);
  }

  // spot values in sym3: (2a)*(2a) = 3*(1a) + 3*(3a)
  const CharacterTable s3 = parse_character_table(data_path("data/s3.ctbl"));
  const auto i2a = static_cast<std::uint32_t>(s3.index_of_label("2a"));
  CHECK(burnside_coeff(s3, i2a, i2a, 0) == 3);
  CHECK(burnside_coeff(s3, i2a, i2a, i2a) == 0);
  CHECK(burnside_coeff(s3, i2a, i2a, static_cast<std::uint32_t>(s3.index_of_label("3a"))) == 3);
  CHECK_THROWS_AS(burnside_coeff(s3, 0, 0, 7), std::invalid_argument);
}

TEST_CASE("non-integral coefficients are reported, not returned") {
  CharacterTable t = parse_character_table(data_path("data/s3.ctbl"));
  t.chars[2][2] = Cyclotomic();  // corrupt chi_3(3a) after validation
  CHECK_THROWS_WITH_AS(burnside_coeff(t, 2, 2, 0),
                       doctest::Contains("character table inconsistent"), std::runtime_error);
  CHECK_THROWS_AS(class_mult_table_burnside(t, 2), std::runtime_error);
}
