#include "loewy/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "loewy/blocks.hpp"
#include "loewy/classes.hpp"
#include "loewy/sc_algebra.hpp"
#include "loewy/sylow.hpp"
#include "loewy/util.hpp"

namespace loewy {

namespace {

// analysis of a center algebra over GF(p) plus the group facts it cannot see
AnalysisReport analyze_center(const SCAlgebra& base, const std::vector<mpz_class>& sizes,
                              const mpz_class& order, std::string name, std::string route,
                              std::uint64_t p, const AnalyzeOptions& opts,
                              std::optional<bool> ti) {
  AnalysisReport rep;
  rep.name = std::move(name);
  rep.order = order;
  rep.prime = p;
  rep.route = std::move(route);
  rep.classes = base.dim();
  rep.ti = ti;

  std::uint32_t m = opts.field_degree;
  BlockDecomposition dec = decompose_blocks(base);
  if (m == 0) {
    std::uint64_t l = 1;
    for (const Block& b : dec.blocks) l = lcm_u64(l, b.residue_degree);
    if (l > 64)
      throw std::runtime_error("analyze: splitting-field degree " + std::to_string(l) +
                               " exceeds the supported bound 64");
    m = std::uint32_t(l);
  }
  const SCAlgebra a = m > 1 ? extend_scalars(base, m) : base;
  if (m > 1) dec = decompose_blocks(a);
  rep.field_degree = m;

  const Subspace rad = radical(a);
  const std::size_t pi = principal_block(a, dec, sizes);
  std::size_t total = 0;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const Block& b = dec.blocks[i];
    BlockRow row;
    row.id = i;
    row.principal = i == pi;
    row.defect = block_defect(a, b, order, sizes, &rad);
    row.dim = b.dim();
    row.residue_degree = b.residue_degree;
    const LoewyReport lr = block_loewy_series(a, b, &rad);
    row.loewy_length = lr.loewy_length;
    row.dim_j2 = lr.layer_dims.size() > 2 ? lr.layer_dims[2] : 0;
    row.layer_dims = lr.layer_dims;
    total += row.dim;
    rep.blocks.push_back(std::move(row));
  }
  if (total != rep.classes)
    throw std::logic_error("analyze: block dimensions sum to " + std::to_string(total) +
                           ", expected " + std::to_string(rep.classes));
  return rep;
}

std::vector<mpz_class> mpz_sizes(const ConjugacyClassSet& cls) {
  std::vector<mpz_class> out;
  out.reserve(cls.sizes.size());
  for (auto s : cls.sizes) out.emplace_back(static_cast<unsigned long>(s));
  return out;
}

AnalysisReport analyze_group_ti(const EnumeratedGroup& g, std::uint64_t p,
                                const AnalyzeOptions& opts, std::optional<bool> ti) {
  const ConjugacyClassSet cls = conjugacy_classes(g);
  const SCAlgebra a = center_algebra(g, cls, p, opts.threads);
  const std::string name = g.name().empty() ? "(unnamed group)" : g.name();
  return analyze_center(a, mpz_sizes(cls), mpz_class(static_cast<unsigned long>(g.order())),
                        name, "enumeration", p, opts, ti);
}

ComparisonReport assemble_comparison(AnalysisReport rg, AnalysisReport rn) {
  ComparisonReport rep;
  rep.group = std::move(rg);
  rep.normalizer = std::move(rn);
  const BlockRow& bg = rep.group.principal_row();
  const BlockRow& bn = rep.normalizer.principal_row();
  rep.delta = static_cast<long long>(bg.dim_j2) - static_cast<long long>(bn.dim_j2);
  rep.dims_equal = bg.dim == bn.dim;
  rep.layers_equal = bg.layer_dims == bn.layer_dims;
  rep.conjecture = rep.delta == 1;
  rep.obstruction = !rep.layers_equal;
  if (rep.group.ti && *rep.group.ti && !rep.dims_equal)
    throw std::logic_error("compare: Sylow subgroups intersect trivially but the principal "
                           "blocks have dimensions " + std::to_string(bg.dim) + " and " +
                           std::to_string(bn.dim));
  return rep;
}

} // namespace

AnalysisReport analyze_group(const EnumeratedGroup& g, std::uint64_t p,
                             const AnalyzeOptions& opts) {
  std::optional<bool> ti;
  if (opts.check_ti)
    ti = trivial_intersection_check(g, sylow_subgroup(g, p)).trivial;
  return analyze_group_ti(g, p, opts, ti);
}

AnalysisReport analyze_table(const CharacterTable& t, std::uint64_t p,
                             const AnalyzeOptions& opts) {
  const SCAlgebra a = center_algebra(t, p, opts.threads);
  return analyze_center(a, t.sizes, t.order, t.name.empty() ? "(unnamed table)" : t.name,
                        "table", p, opts, std::nullopt);
}

ComparisonReport compare_group(const EnumeratedGroup& g, std::uint64_t p,
                               const AnalyzeOptions& opts) {
  const EnumeratedGroup syl = sylow_subgroup(g, p);
  EnumeratedGroup norm = normalizer(g, syl);
  const std::string gname = g.name().empty() ? "(unnamed group)" : g.name();
  norm.set_name("N_" + gname + "(P)");
  std::optional<bool> gti, nti;
  if (opts.check_ti) {
    gti = trivial_intersection_check(g, syl).trivial;
    nti = trivial_intersection_check(norm, syl).trivial;
  }
  return assemble_comparison(analyze_group_ti(g, p, opts, gti),
                             analyze_group_ti(norm, p, opts, nti));
}

ComparisonReport compare_tables(const CharacterTable& tg, const CharacterTable& tn,
                                std::uint64_t p, const AnalyzeOptions& opts) {
  return assemble_comparison(analyze_table(tg, p, opts), analyze_table(tn, p, opts));
}

// ---- manifest parsing and checking ------------------------------------------

namespace {

struct Expected {
  bool set = false;
  unsigned defect = 0;
  std::size_t dim = 0, ll = 0, j2 = 0;
};

struct ManifestEntry {
  std::string name;
  std::uint64_t prime = 0;
  std::string group;   // builtin:<spec> or a file path
  std::string table;   // character table path (G side)
  std::string ntable;  // character table path (N side)
  Expected expect_g, expect_n;
  bool has_delta = false;
  long long delta = 0;
  bool has_blocks_g = false;
  std::size_t blocks_g = 0;
  bool has_layers_equal = false;
  bool layers_equal = false;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

Expected parse_expected(const std::vector<std::string>& tok, const std::string& where) {
  if (tok.size() != 5)
    throw std::invalid_argument(where + ": expected 4 integers (defect dim LL dimJ2)");
  Expected e;
  e.set = true;
  e.defect = unsigned(std::stoul(tok[1]));
  e.dim = std::stoul(tok[2]);
  e.ll = std::stoul(tok[3]);
  e.j2 = std::stoul(tok[4]);
  return e;
}

std::vector<ManifestEntry> parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("manifest: cannot open " + path);
  std::vector<ManifestEntry> entries;
  ManifestEntry cur;
  bool open = false;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "entry") {
      if (open) fail("entry before the previous one ended");
      if (tok.size() != 2) fail("entry takes exactly one name");
      cur = ManifestEntry{};
      cur.name = tok[1];
      open = true;
      continue;
    }
    if (!open) fail("directive outside an entry: " + key);
    if (key == "end") {
      if (cur.prime == 0) fail("entry " + cur.name + " has no prime");
      const bool group_route = !cur.group.empty();
      const bool table_route = !cur.table.empty() || !cur.ntable.empty();
      if (group_route == table_route)
        fail("entry " + cur.name + " must use exactly one of group / table+ntable");
      if (table_route && (cur.table.empty() || cur.ntable.empty()))
        fail("entry " + cur.name + " needs both table and ntable");
      entries.push_back(cur);
      open = false;
    } else if (key == "prime") {
      if (tok.size() != 2) fail("prime takes one value");
      cur.prime = std::stoull(tok[1]);
    } else if (key == "group") {
      if (tok.size() != 2) fail("group takes one spec");
      cur.group = tok[1];
    } else if (key == "table") {
      if (tok.size() != 2) fail("table takes one path");
      cur.table = tok[1];
    } else if (key == "ntable") {
      if (tok.size() != 2) fail("ntable takes one path");
      cur.ntable = tok[1];
    } else if (key == "expect-g") {
      cur.expect_g = parse_expected(tok, path + ":" + std::to_string(lineno));
    } else if (key == "expect-n") {
      cur.expect_n = parse_expected(tok, path + ":" + std::to_string(lineno));
    } else if (key == "expect-delta") {
      if (tok.size() != 2) fail("expect-delta takes one integer");
      cur.has_delta = true;
      cur.delta = std::stoll(tok[1]);
    } else if (key == "expect-blocks-g") {
      if (tok.size() != 2) fail("expect-blocks-g takes one integer");
      cur.has_blocks_g = true;
      cur.blocks_g = std::stoul(tok[1]);
    } else if (key == "expect-layers-equal") {
      if (tok.size() != 2 || (tok[1] != "true" && tok[1] != "false"))
        fail("expect-layers-equal takes true or false");
      cur.has_layers_equal = true;
      cur.layers_equal = tok[1] == "true";
    } else {
      fail("unknown directive: " + key);
    }
  }
  if (open) fail("unterminated entry " + cur.name);
  return entries;
}

std::string resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path fp(p);
  if (fp.is_absolute()) return fp.string();
  return (base / fp).string();
}

void diff_expected(const Expected& e, const BlockRow& b, const std::string& side,
                   std::vector<std::string>& problems) {
  if (!e.set) return;
  auto miss = [&](const std::string& what, std::size_t got, std::size_t want) {
    problems.push_back(side + " " + what + " " + std::to_string(got) + " != " +
                       std::to_string(want));
  };
  if (b.defect != e.defect) miss("defect", b.defect, e.defect);
  if (b.dim != e.dim) miss("dim", b.dim, e.dim);
  if (b.loewy_length != e.ll) miss("LL", b.loewy_length, e.ll);
  if (b.dim_j2 != e.j2) miss("dimJ2", b.dim_j2, e.j2);
}

std::string tuple_of(const BlockRow& b) {
  return "(" + std::to_string(b.defect) + "," + std::to_string(b.dim) + "," +
         std::to_string(b.loewy_length) + "," + std::to_string(b.dim_j2) + ")";
}

CheckEntry run_entry(const ManifestEntry& me, const std::filesystem::path& base,
                     const AnalyzeOptions& opts) {
  CheckEntry out;
  out.name = me.name;

  // gate on input files before doing any work
  std::vector<std::string> missing;
  auto need_file = [&](const std::string& p) {
    const std::string full = resolve(base, p);
    if (!std::filesystem::exists(full)) missing.push_back(p);
    return full;
  };
  std::string group_spec, table_path, ntable_path;
  if (!me.group.empty()) {
    if (me.group.rfind("builtin:", 0) == 0)
      group_spec = me.group;
    else if (me.group.rfind("file:", 0) == 0)
      group_spec = need_file(me.group.substr(5));
    else
      group_spec = need_file(me.group);
  } else {
    table_path = need_file(me.table);
    ntable_path = need_file(me.ntable);
  }
  if (!missing.empty()) {
    out.status = "skipped";
    out.detail = "missing input";
    for (std::size_t i = 0; i < missing.size(); ++i)
      out.detail += (i ? ", " : ": ") + missing[i];
    return out;
  }

  try {
    ComparisonReport rep;
    if (!group_spec.empty()) {
      EnumeratedGroup::Options gopts;
      gopts.max_order = opts.max_order;
      rep = compare_group(load_group(group_spec, gopts), me.prime, opts);
    } else {
      rep = compare_tables(parse_character_table(table_path),
                           parse_character_table(ntable_path), me.prime, opts);
    }
    const BlockRow& bg = rep.group.principal_row();
    const BlockRow& bn = rep.normalizer.principal_row();
    std::vector<std::string> problems;
    diff_expected(me.expect_g, bg, "B0", problems);
    diff_expected(me.expect_n, bn, "b0", problems);
    if (me.has_delta && rep.delta != me.delta)
      problems.push_back("delta " + std::to_string(rep.delta) + " != " +
                         std::to_string(me.delta));
    if (me.has_blocks_g && rep.group.blocks.size() != me.blocks_g)
      problems.push_back("blocks " + std::to_string(rep.group.blocks.size()) + " != " +
                         std::to_string(me.blocks_g));
    if (me.has_layers_equal && rep.layers_equal != me.layers_equal)
      problems.push_back(std::string("layers_equal ") + (rep.layers_equal ? "true" : "false") +
                         " != " + (me.layers_equal ? "true" : "false"));
    if (problems.empty()) {
      out.status = "pass";
      out.detail = "B0 " + tuple_of(bg) + " b0 " + tuple_of(bn) + " delta " +
                   std::to_string(rep.delta);
    } else {
      out.status = "fail";
      for (std::size_t i = 0; i < problems.size(); ++i)
        out.detail += (i ? "; " : "") + problems[i];
    }
  } catch (const std::exception& e) {
    out.status = "fail";
    out.detail = e.what();
  }
  return out;
}

} // namespace

CheckSummary table_check(const std::string& manifest_path, const AnalyzeOptions& opts) {
  const std::vector<ManifestEntry> entries = parse_manifest(manifest_path);
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  CheckSummary sum;
  for (const ManifestEntry& me : entries) {
    CheckEntry e = run_entry(me, base, opts);
    if (e.status == "pass")
      ++sum.passed;
    else if (e.status == "fail")
      ++sum.failed;
    else
      ++sum.skipped;
    sum.entries.push_back(std::move(e));
  }
  return sum;
}

std::string render_text(const CheckSummary& s) {
  std::ostringstream out;
  std::size_t w = 4;
  for (const CheckEntry& e : s.entries) w = std::max(w, e.name.size());
  for (const CheckEntry& e : s.entries) {
    std::string status = e.status;
    status.resize(7, ' ');
    for (auto& c : status) c = char(std::toupper(static_cast<unsigned char>(c)));
    out << "  " << status << " " << e.name << std::string(w - e.name.size() + 2, ' ')
        << e.detail << "\n";
  }
  out << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

std::string serialize_summary(const CheckSummary& s) {
  nlohmann::ordered_json j;
  j["kind"] = "check";
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CheckEntry& e : s.entries) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["status"] = e.status;
    row["detail"] = e.detail;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  return j.dump(2) + "\n";
}

} // namespace loewy
