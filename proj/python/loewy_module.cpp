// pybind11 extension: thin wrappers over the analysis pipeline.  Every
// function returns the canonical JSON serialization; the Python package
// decodes it into plain dicts.

#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "loewy/chartab.hpp"
#include "loewy/group.hpp"
#include "loewy/pipeline.hpp"
#include "loewy/report.hpp"

namespace py = pybind11;
using namespace loewy;

namespace {

AnalyzeOptions make_options(std::uint32_t field_degree, unsigned threads,
                            std::uint64_t max_order, bool check_ti) {
  AnalyzeOptions o;
  o.field_degree = field_degree;
  o.threads = threads;
  o.max_order = max_order;
  o.check_ti = check_ti;
  return o;
}

EnumeratedGroup load(const std::string& spec, std::uint64_t max_order) {
  EnumerationOptions e;
  e.max_order = max_order;
  return load_group(spec, e);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Loewy structure of centers of blocks of modular group algebras";
  m.attr("__version__") = "0.1.0";

  m.def(
      "analyze_group",
      [](const std::string& spec, std::uint64_t prime, std::uint32_t field_degree,
         unsigned threads, std::uint64_t max_order, bool check_ti) {
        const AnalyzeOptions o = make_options(field_degree, threads, max_order, check_ti);
        return serialize_report(analyze_group(load(spec, max_order), prime, o));
      },
      py::arg("spec"), py::arg("prime"), py::arg("field_degree") = 0, py::arg("threads") = 1,
      py::arg("max_order") = 2'000'000, py::arg("check_ti") = true,
      "Block analysis of Z(kG) for a group given as builtin:<name>, file:<path>, "
      "or a generator file path.  Returns the analysis report as a JSON string.");

  m.def(
      "analyze_table",
      [](const std::string& path, std::uint64_t prime, std::uint32_t field_degree,
         unsigned threads) {
        const AnalyzeOptions o = make_options(field_degree, threads, 0, false);
        return serialize_report(analyze_table(parse_character_table(path), prime, o));
      },
      py::arg("path"), py::arg("prime"), py::arg("field_degree") = 0, py::arg("threads") = 1,
      "Block analysis of Z(kG) from a character table file.  Returns the "
      "analysis report as a JSON string.");

  m.def(
      "compare_group",
      [](const std::string& spec, std::uint64_t prime, std::uint32_t field_degree,
         unsigned threads, std::uint64_t max_order, bool check_ti) {
        const AnalyzeOptions o = make_options(field_degree, threads, max_order, check_ti);
        return serialize_report(compare_group(load(spec, max_order), prime, o));
      },
      py::arg("spec"), py::arg("prime"), py::arg("field_degree") = 0, py::arg("threads") = 1,
      py::arg("max_order") = 2'000'000, py::arg("check_ti") = true,
      "Principal-block comparison of G against the normalizer of a Sylow "
      "p-subgroup.  Returns the comparison report as a JSON string.");

  m.def(
      "compare_tables",
      [](const std::string& group_path, const std::string& normalizer_path, std::uint64_t prime,
         std::uint32_t field_degree, unsigned threads) {
        const AnalyzeOptions o = make_options(field_degree, threads, 0, false);
        return serialize_report(compare_tables(parse_character_table(group_path),
                                               parse_character_table(normalizer_path), prime, o));
      },
      py::arg("group_path"), py::arg("normalizer_path"), py::arg("prime"),
      py::arg("field_degree") = 0, py::arg("threads") = 1,
      "Principal-block comparison from two character table files (G and the "
      "Sylow normalizer).  Returns the comparison report as a JSON string.");

  m.def(
      "check",
      [](const std::string& manifest_path, unsigned threads, std::uint64_t max_order) {
        AnalyzeOptions o;
        o.threads = threads;
        o.max_order = max_order;
        return serialize_summary(table_check(manifest_path, o));
      },
      py::arg("manifest_path"), py::arg("threads") = 1, py::arg("max_order") = 2'000'000,
      "Run every entry of a corpus manifest; absent input files give "
      "\"skipped\" entries.  Returns the check summary as a JSON string.");
}
