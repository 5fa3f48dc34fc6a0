#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loewy/chartab.hpp"
#include "loewy/classes.hpp"
#include "loewy/group.hpp"
#include "loewy/pipeline.hpp"

using namespace loewy;
using ojson = nlohmann::ordered_json;

namespace {

struct CommonArgs {
  std::string group;
  std::string table;
  std::string ntable;
  std::uint64_t prime = 0;
  std::string field_degree = "auto";
  unsigned threads = 1;
  std::uint64_t max_order = 2'000'000;
  std::string format = "text";
};

AnalyzeOptions make_options(const CommonArgs& a) {
  AnalyzeOptions opts;
  if (a.field_degree == "auto") {
    opts.field_degree = 0;
  } else {
    const unsigned long m = std::stoul(a.field_degree);
    if (m == 0) throw CLI::ValidationError("--field-degree", "must be \"auto\" or a positive integer");
    opts.field_degree = std::uint32_t(m);
  }
  opts.threads = a.threads;
  opts.max_order = a.max_order;
  return opts;
}

EnumeratedGroup load(const CommonArgs& a) {
  EnumeratedGroup::Options gopts;
  gopts.max_order = a.max_order;
  return load_group(a.group, gopts);
}

void require_one_input(const CommonArgs& a) {
  if (a.group.empty() == a.table.empty())
    throw CLI::ValidationError("input", "give exactly one of --group or --table");
  if (!a.ntable.empty())
    throw CLI::ValidationError("--ntable", "only the compare subcommand takes a normalizer table");
}

// row-oriented class data shared by both input routes
struct ClassRows {
  std::string name;
  std::string order;
  std::vector<std::string> labels;
  std::vector<std::string> sizes;
  std::vector<std::uint64_t> element_orders;
  std::vector<std::uint32_t> inverse_class;
};

ClassRows class_rows(const EnumeratedGroup& g, const ConjugacyClassSet& cls) {
  ClassRows r;
  r.name = g.name().empty() ? "(unnamed group)" : g.name();
  r.order = std::to_string(g.order());
  r.labels = cls.labels;
  for (auto s : cls.sizes) r.sizes.push_back(std::to_string(s));
  r.element_orders = cls.element_orders;
  r.inverse_class = cls.inverse_class;
  return r;
}

ClassRows class_rows(const CharacterTable& t) {
  ClassRows r;
  r.name = t.name.empty() ? "(unnamed table)" : t.name;
  r.order = t.order.get_str();
  r.labels = t.labels;
  for (const auto& s : t.sizes) r.sizes.push_back(s.get_str());
  r.element_orders = t.element_orders;
  r.inverse_class = t.inverse_class;
  return r;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line = " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += " " + row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size(), ' ');
    }
    std::printf("%s\n", line.c_str());
  }
}

int run_classes(const CommonArgs& a) {
  require_one_input(a);
  ClassRows r;
  if (!a.group.empty()) {
    const EnumeratedGroup g = load(a);
    r = class_rows(g, conjugacy_classes(g));
  } else {
    r = class_rows(parse_character_table(a.table));
  }
  if (a.format == "json") {
    ojson j;
    j["kind"] = "classes";
    j["name"] = r.name;
    j["order"] = r.order;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      ojson row;
      row["label"] = r.labels[i];
      row["size"] = r.sizes[i];
      row["element_order"] = r.element_orders[i];
      row["inverse"] = r.labels[r.inverse_class[i]];
      rows.push_back(std::move(row));
    }
    j["classes"] = std::move(rows);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s: order %s, %zu classes\n", r.name.c_str(), r.order.c_str(),
                r.labels.size());
    std::vector<std::vector<std::string>> rows{{"label", "size", "element-order", "inverse"}};
    for (std::size_t i = 0; i < r.labels.size(); ++i)
      rows.push_back({r.labels[i], r.sizes[i], std::to_string(r.element_orders[i]),
                      r.labels[r.inverse_class[i]]});
    print_table(rows);
  }
  return 0;
}

int run_coeffs(const CommonArgs& a, const std::vector<std::string>& triple) {
  require_one_input(a);
  if (!triple.empty() && triple.size() != 3)
    throw CLI::ValidationError("labels", "give no labels (full cube) or exactly three");

  std::vector<std::string> labels;
  std::vector<std::string> cube;  // decimal strings, entry (i,j,k) at [(k*r+i)*r+j]
  std::string name;
  auto single = [&](std::size_t i, std::size_t j, std::size_t k) -> std::string& {
    return cube[(k * labels.size() + i) * labels.size() + j];
  };
  if (!a.group.empty()) {
    const EnumeratedGroup g = load(a);
    const ConjugacyClassSet cls = conjugacy_classes(g);
    name = g.name();
    labels = cls.labels;
    if (triple.empty()) {
      for (auto v : class_mult_table_enum(g, cls, a.threads))
        cube.push_back(std::to_string(v));
    } else {
      const auto i = std::uint32_t(cls.index_of_label(triple[0]));
      const auto j = std::uint32_t(cls.index_of_label(triple[1]));
      const auto k = std::uint32_t(cls.index_of_label(triple[2]));
      const std::uint64_t v = class_mult_coeff_enum(g, cls, i, j, k);
      cube.assign(labels.size() * labels.size() * labels.size(), "0");
      single(i, j, k) = std::to_string(v);
    }
  } else {
    const CharacterTable t = parse_character_table(a.table);
    name = t.name;
    labels = t.labels;
    if (triple.empty()) {
      for (const auto& v : class_mult_table_burnside(t, a.threads))
        cube.push_back(v.get_str());
    } else {
      const auto i = std::uint32_t(t.index_of_label(triple[0]));
      const auto j = std::uint32_t(t.index_of_label(triple[1]));
      const auto k = std::uint32_t(t.index_of_label(triple[2]));
      cube.assign(labels.size() * labels.size() * labels.size(), "0");
      single(i, j, k) = burnside_coeff(t, i, j, k).get_str();
    }
  }

  const std::size_t r = labels.size();
  auto selected = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (triple.empty()) return single(i, j, k) != "0";
    return labels[i] == triple[0] && labels[j] == triple[1] && labels[k] == triple[2];
  };
  if (a.format == "json") {
    ojson j;
    j["kind"] = "coeffs";
    j["name"] = name;
    j["labels"] = labels;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t jj = 0; jj < r; ++jj)
        for (std::size_t k = 0; k < r; ++k)
          if (selected(i, jj, k))
            rows.push_back(ojson::array({labels[i], labels[jj], labels[k], single(i, jj, k)}));
    j["nonzero"] = std::move(rows);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::vector<std::vector<std::string>> rows{{"i", "j", "k", "a(i,j,k)"}};
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t jj = 0; jj < r; ++jj)
        for (std::size_t k = 0; k < r; ++k)
          if (selected(i, jj, k))
            rows.push_back({labels[i], labels[jj], labels[k], single(i, jj, k)});
    print_table(rows);
  }
  return 0;
}

int run_analyze(const CommonArgs& a) {
  require_one_input(a);
  const AnalyzeOptions opts = make_options(a);
  const AnalysisReport rep = a.group.empty()
                                 ? analyze_table(parse_character_table(a.table), a.prime, opts)
                                 : analyze_group(load(a), a.prime, opts);
  const std::string out = a.format == "json" ? serialize_report(rep) : render_text(rep);
  std::fputs(out.c_str(), stdout);
  return 0;
}

int run_compare(const CommonArgs& a) {
  const bool group_route = !a.group.empty();
  const bool table_route = !a.table.empty() || !a.ntable.empty();
  if (group_route == table_route)
    throw CLI::ValidationError("input", "give either --group, or --table with --ntable");
  if (table_route && (a.table.empty() || a.ntable.empty()))
    throw CLI::ValidationError("input", "the table route needs both --table and --ntable");
  const AnalyzeOptions opts = make_options(a);
  const ComparisonReport rep =
      group_route ? compare_group(load(a), a.prime, opts)
                  : compare_tables(parse_character_table(a.table),
                                   parse_character_table(a.ntable), a.prime, opts);
  const std::string out = a.format == "json" ? serialize_report(rep) : render_text(rep);
  std::fputs(out.c_str(), stdout);
  return 0;
}

int run_check(const CommonArgs& a, const std::string& manifest) {
  const CheckSummary s = table_check(manifest, make_options(a));
  const std::string out = a.format == "json" ? serialize_summary(s) : render_text(s);
  std::fputs(out.c_str(), stdout);
  return s.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewy structure of centers of group-algebra blocks"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<std::string> triple;
  std::string manifest = "data/corpus.manifest";

  auto add_common = [&](CLI::App* cmd, bool with_prime) {
    cmd->add_option("--group", args.group, "builtin:<spec> or a .grp file");
    cmd->add_option("--table", args.table, "character table (.ctbl) of the group");
    if (with_prime) cmd->add_option("--prime", args.prime, "characteristic p")->required();
    cmd->add_option("--field-degree", args.field_degree,
                    "coefficient field degree over GF(p), or \"auto\" (least splitting degree)")
        ->capture_default_str();
    cmd->add_option("--threads", args.threads, "worker threads for coefficient assembly")
        ->capture_default_str();
    cmd->add_option("--max-order", args.max_order, "enumeration cap")->capture_default_str();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* classes = app.add_subcommand("classes", "conjugacy class data");
  add_common(classes, false);

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "class multiplication coefficients a(i,j,k) = #{(x,y) in Ci x Cj : xy = z}, z in Ck");
  add_common(coeffs, false);
  coeffs->add_option("labels", triple, "three class labels i j k (omit for the full cube)");

  CLI::App* analyze =
      app.add_subcommand("analyze", "block decomposition of the center of kG with Loewy data");
  add_common(analyze, true);

  CLI::App* compare = app.add_subcommand(
      "compare", "principal block of G vs the principal block of the Sylow normalizer");
  add_common(compare, true);
  compare->add_option("--ntable", args.ntable, "character table of N_G(P) (table route)");

  CLI::App* check = app.add_subcommand("check", "run a corpus manifest and diff expectations");
  check->add_option("manifest", manifest, "manifest path")->capture_default_str();
  check->add_option("--threads", args.threads, "worker threads")->capture_default_str();
  check->add_option("--max-order", args.max_order, "enumeration cap")->capture_default_str();
  check->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classes)) return run_classes(args);
    if (app.got_subcommand(coeffs)) return run_coeffs(args, triple);
    if (app.got_subcommand(analyze)) return run_analyze(args);
    if (app.got_subcommand(compare)) return run_compare(args);
    return run_check(args, manifest);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
