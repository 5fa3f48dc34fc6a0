#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewy/chartab.hpp"
#include "loewy/group.hpp"
#include "loewy/pipeline.hpp"
#include "loewy/report.hpp"

using namespace loewy;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(LOEWY_SOURCE_DIR) + "/" + rel;
}

// writes a throwaway manifest and returns its path
std::string tmp_manifest(const std::string& stem, const std::string& text) {
  const std::string path =
      (std::filesystem::temp_directory_path() / ("loewy_" + stem + ".manifest")).string();
  std::ofstream out(path);
  out << text;
  out.close();
  return path;
}

const CheckEntry& entry_named(const CheckSummary& s, const std::string& name) {
  for (const CheckEntry& e : s.entries)
    if (e.name == name) return e;
  throw std::logic_error("no entry " + name);
}

} // namespace

TEST_CASE("analysis of a small group fills every field") {
  AnalyzeOptions opts;
  opts.threads = 2;
  const AnalysisReport r = analyze_group(load_group("builtin:sym3"), 3, opts);
  CHECK(r.name == "sym3");
  CHECK(r.order == 6);
  CHECK(r.prime == 3);
  CHECK(r.route == "enumeration");
  CHECK(r.field_degree == 1);
  CHECK(r.classes == 3);
  REQUIRE(r.ti.has_value());
  CHECK(*r.ti == true);
  REQUIRE(r.blocks.size() == 1);
  const BlockRow& b = r.blocks[0];
  CHECK(b.id == 0);
  CHECK(b.principal);
  CHECK(b.defect == 1);
  CHECK(b.dim == 3);
  CHECK(b.loewy_length == 2);
  CHECK(b.dim_j2 == 0);
  CHECK(b.residue_degree == 1);
  CHECK(b.layer_dims == std::vector<std::size_t>{3, 2, 0});
  CHECK(&r.principal_row() == &b);
}

TEST_CASE("splitting-field degree is chosen automatically") {
  const EnumeratedGroup g = load_group("builtin:cyc5");

  AnalyzeOptions opts;
  const AnalysisReport r = analyze_group(g, 2, opts);
  CHECK(r.field_degree == 4);  // order of 2 mod 5
  CHECK(r.blocks.size() == 5);
  std::size_t principal = 0;
  for (const BlockRow& b : r.blocks) {
    CHECK(b.dim == 1);
    CHECK(b.loewy_length == 1);
    CHECK(b.dim_j2 == 0);
    CHECK(b.defect == 0);
    CHECK(b.residue_degree == 1);
    principal += b.principal;
  }
  CHECK(principal == 1);

  opts.field_degree = 1;  // forced prime field: one block stays irreducible
  const AnalysisReport r1 = analyze_group(g, 2, opts);
  CHECK(r1.field_degree == 1);
  REQUIRE(r1.blocks.size() == 2);
  CHECK(r1.blocks[0].dim == 4);
  CHECK(r1.blocks[0].residue_degree == 4);
  CHECK_FALSE(r1.blocks[0].principal);
  CHECK(r1.principal_row().dim == 1);
}

TEST_CASE("character-table route matches enumeration and leaves TI unset") {
  AnalyzeOptions opts;
  const AnalysisReport rt = analyze_table(parse_character_table(data_path("data/a5.ctbl")), 2, opts);
  CHECK(rt.route == "table");
  CHECK(rt.order == 60);
  CHECK_FALSE(rt.ti.has_value());
  REQUIRE(rt.blocks.size() == 2);
  CHECK(rt.blocks[0].dim == 4);
  CHECK(rt.blocks[0].defect == 2);
  CHECK(rt.blocks[0].principal);
  CHECK(rt.blocks[1].dim == 1);
  CHECK(rt.blocks[1].defect == 0);
  CHECK(rt.blocks[1].loewy_length == 1);

  const AnalysisReport re = analyze_group(load_group("builtin:alt5"), 2, opts);
  REQUIRE(re.blocks.size() == rt.blocks.size());
  for (std::size_t i = 0; i < re.blocks.size(); ++i) {
    CHECK(re.blocks[i].dim == rt.blocks[i].dim);
    CHECK(re.blocks[i].defect == rt.blocks[i].defect);
    CHECK(re.blocks[i].layer_dims == rt.blocks[i].layer_dims);
    CHECK(re.blocks[i].principal == rt.blocks[i].principal);
  }
}

TEST_CASE("normal Sylow subgroup compares a group with itself") {
  const ComparisonReport r = compare_group(load_group("builtin:sym3"), 3);
  CHECK(r.group.name == "sym3");
  CHECK(r.normalizer.name == "N_sym3(P)");
  CHECK(r.normalizer.order == 6);
  CHECK(r.delta == 0);
  CHECK(r.dims_equal);
  CHECK(r.layers_equal);
  CHECK_FALSE(r.conjecture);
  CHECK_FALSE(r.obstruction);
  REQUIRE(r.group.blocks.size() == r.normalizer.blocks.size());
  for (std::size_t i = 0; i < r.group.blocks.size(); ++i)
    CHECK(r.group.blocks[i].layer_dims == r.normalizer.blocks[i].layer_dims);
}

TEST_CASE("proper Sylow normalizer can differ in the second radical layer") {
  const ComparisonReport r = compare_group(load_group("builtin:sym4"), 2);
  REQUIRE(r.group.ti.has_value());
  CHECK_FALSE(*r.group.ti);
  CHECK(r.normalizer.order == 8);
  const BlockRow& bg = r.group.principal_row();
  const BlockRow& bn = r.normalizer.principal_row();
  CHECK(bg.dim == 5);
  CHECK(bg.loewy_length == 3);
  CHECK(bn.dim == 5);
  CHECK(bn.loewy_length == 2);
  CHECK(r.delta == 1);
  CHECK(r.dims_equal);
  CHECK_FALSE(r.layers_equal);
  CHECK(r.conjecture);
  CHECK(r.obstruction);
}

TEST_CASE("table-route comparison takes two tables") {
  const CharacterTable t = parse_character_table(data_path("data/s3.ctbl"));
  // sym3's Sylow 3-subgroup is normal, so the same table serves both sides
  const ComparisonReport r = compare_tables(t, t, 3);
  CHECK(r.group.route == "table");
  CHECK_FALSE(r.group.ti.has_value());
  CHECK_FALSE(r.normalizer.ti.has_value());
  CHECK(r.delta == 0);
  CHECK(r.layers_equal);
}

TEST_CASE("reports serialize to json and round-trip byte for byte") {
  AnalyzeOptions opts;
  const AnalysisReport ar = analyze_table(parse_character_table(data_path("data/a5.ctbl")), 2, opts);
  const std::string a1 = serialize_report(ar);
  const std::string a2 = serialize_report(parse_analysis_report(a1));
  CHECK(a1 == a2);
  CHECK(a1.find("\"kind\": \"analysis\"") != std::string::npos);
  CHECK(a1.find("\"ti\": null") != std::string::npos);

  const ComparisonReport cr = compare_group(load_group("builtin:sym4"), 2, opts);
  const std::string c1 = serialize_report(cr);
  const std::string c2 = serialize_report(parse_comparison_report(c1));
  CHECK(c1 == c2);
  CHECK(c1.find("\"kind\": \"comparison\"") != std::string::npos);
  CHECK(c1.find("\"ti\": false") != std::string::npos);

  CHECK_THROWS_WITH_AS(parse_analysis_report(c1), doctest::Contains("kind"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_comparison_report(a1), doctest::Contains("kind"),
                       std::invalid_argument);
}

TEST_CASE("text rendering shows the principal rows and the verdicts") {
  const ComparisonReport r = compare_group(load_group("builtin:psu3_3"), 3,
                                           AnalyzeOptions{.threads = 2});
  const std::string text = render_text(r);
  CHECK(text.find("psu3_3: order 6048") != std::string::npos);
  CHECK(text.find("TI Sylow: yes") != std::string::npos);
  CHECK(text.find("B0*") != std::string::npos);
  CHECK(text.find("B0 (defect 3, dim 13, LL 3, dim J^2 4)") != std::string::npos);
  CHECK(text.find("b0 (defect 3, dim 13, LL 3, dim J^2 3)") != std::string::npos);
  CHECK(text.find("delta(dim J^2) = 1") != std::string::npos);
  CHECK(text.find("isomorphism excluded by layers: yes") != std::string::npos);
}

TEST_CASE("manifest checking passes, skips, and fails as designed") {
  AnalyzeOptions opts;
  opts.threads = 2;
  const CheckSummary ok = table_check(data_path("tests/fixtures/ok.manifest"), opts);
  CHECK(ok.ok());
  CHECK(ok.passed == 2);
  CHECK(ok.failed == 0);
  CHECK(ok.skipped == 1);
  CHECK(entry_named(ok, "sym3").detail == "B0 (1,3,2,0) b0 (1,3,2,0) delta 0");
  CHECK(entry_named(ok, "gated").status == "skipped");
  CHECK(entry_named(ok, "gated").detail.find("absent.ctbl") != std::string::npos);

  const CheckSummary bad = table_check(data_path("tests/fixtures/bad.manifest"), opts);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failed == 1);
  CHECK(entry_named(bad, "sym3_wrong").detail.find("delta 0 != 7") != std::string::npos);

  const std::string text = render_text(ok);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("SKIPPED") != std::string::npos);
  CHECK(text.find("2 passed, 0 failed, 1 skipped") != std::string::npos);

  const std::string json = serialize_summary(bad);
  CHECK(json.find("\"kind\": \"check\"") != std::string::npos);
  CHECK(json.find("\"failed\": 1") != std::string::npos);
}

TEST_CASE("manifest syntax errors are reported with line numbers") {
  auto check_error = [](const std::string& stem, const std::string& text,
                        const std::string& needle) {
    const std::string path = tmp_manifest(stem, text);
    CHECK_THROWS_WITH_AS(table_check(path), doctest::Contains(needle.c_str()),
                         std::invalid_argument);
    std::filesystem::remove(path);
  };
  check_error("unknown", "entry a\nprime 3\ngroup builtin:sym3\nfoo 1\nend\n",
              "unknown directive: foo");
  check_error("noprime", "entry a\ngroup builtin:sym3\nend\n", "no prime");
  check_error("tworoutes",
              "entry a\nprime 3\ngroup builtin:sym3\ntable x.ctbl\nntable y.ctbl\nend\n",
              "exactly one of group");
  check_error("halftables", "entry a\nprime 3\ntable x.ctbl\nend\n", "both table and ntable");
  check_error("unterminated", "entry a\nprime 3\ngroup builtin:sym3\n", "unterminated");
  check_error("stray", "prime 3\n", "outside an entry");
  check_error("nested", "entry a\nentry b\nend\n", "before the previous one ended");
  CHECK_THROWS_WITH_AS(table_check("/nonexistent/nowhere.manifest"),
                       doctest::Contains("cannot open"), std::invalid_argument);

  const std::string empty = tmp_manifest("empty", "# nothing here\n");
  const CheckSummary s = table_check(empty);
  CHECK(s.ok());
  CHECK(s.entries.empty());
  std::filesystem::remove(empty);
}

TEST_CASE("manifest entries fail with the error message when computation throws") {
  const std::string path = tmp_manifest(
      "trap", "entry notprime\nprime 6\ngroup builtin:sym3\nend\n");
  const CheckSummary s = table_check(path);
  std::filesystem::remove(path);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].status == "fail");
  CHECK(s.entries[0].detail.find("prime") != std::string::npos);
  CHECK_FALSE(s.ok());
}

TEST_CASE("trivial group analyzes to a single simple block") {
  const AnalysisReport r = analyze_group(load_group("builtin:cyc1"), 5);
  CHECK(r.order == 1);
  CHECK(r.classes == 1);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].dim == 1);
  CHECK(r.blocks[0].loewy_length == 1);
  CHECK(r.blocks[0].defect == 0);
  CHECK(r.blocks[0].principal);
}

TEST_CASE("analysis rejects a composite characteristic") {
  CHECK_THROWS_WITH_AS(analyze_group(load_group("builtin:sym3"), 6),
                       doctest::Contains("prime"), std::invalid_argument);
}
