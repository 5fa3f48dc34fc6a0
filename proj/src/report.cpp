#include "loewy/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace loewy {

using ojson = nlohmann::ordered_json;

const BlockRow& AnalysisReport::principal_row() const {
  for (const BlockRow& b : blocks)
    if (b.principal) return b;
  throw std::logic_error("AnalysisReport: no principal block row");
}

namespace {

ojson analysis_to_json(const AnalysisReport& r) {
  ojson j;
  j["name"] = r.name;
  j["order"] = r.order.get_str();
  j["prime"] = r.prime;
  j["route"] = r.route;
  j["field_degree"] = r.field_degree;
  j["classes"] = r.classes;
  if (r.ti)
    j["ti"] = *r.ti;
  else
    j["ti"] = nullptr;
  ojson rows = ojson::array();
  for (const BlockRow& b : r.blocks) {
    ojson row;
    row["id"] = b.id;
    row["principal"] = b.principal;
    row["defect"] = b.defect;
    row["dim"] = b.dim;
    row["loewy_length"] = b.loewy_length;
    row["dim_j2"] = b.dim_j2;
    row["residue_degree"] = b.residue_degree;
    row["layer_dims"] = b.layer_dims;
    rows.push_back(std::move(row));
  }
  j["blocks"] = std::move(rows);
  return j;
}

AnalysisReport analysis_from_json(const ojson& j) {
  AnalysisReport r;
  r.name = j.at("name").get<std::string>();
  r.order = mpz_class(j.at("order").get<std::string>());
  r.prime = j.at("prime").get<std::uint64_t>();
  r.route = j.at("route").get<std::string>();
  r.field_degree = j.at("field_degree").get<std::uint32_t>();
  r.classes = j.at("classes").get<std::size_t>();
  if (!j.at("ti").is_null()) r.ti = j.at("ti").get<bool>();
  for (const ojson& row : j.at("blocks")) {
    BlockRow b;
    b.id = row.at("id").get<std::size_t>();
    b.principal = row.at("principal").get<bool>();
    b.defect = row.at("defect").get<unsigned>();
    b.dim = row.at("dim").get<std::size_t>();
    b.loewy_length = row.at("loewy_length").get<std::size_t>();
    b.dim_j2 = row.at("dim_j2").get<std::size_t>();
    b.residue_degree = row.at("residue_degree").get<std::size_t>();
    b.layer_dims = row.at("layer_dims").get<std::vector<std::size_t>>();
    r.blocks.push_back(std::move(b));
  }
  return r;
}

std::string layers_string(const std::vector<std::size_t>& layers) {
  std::string s;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(layers[i]);
  }
  return s;
}

void append_row(std::ostringstream& out, const std::vector<std::string>& cells,
                const std::vector<std::size_t>& widths) {
  out << " ";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out << " " << cells[c];
    if (c + 1 < cells.size())
      out << std::string(widths[c] - cells[c].size(), ' ');
  }
  out << "\n";
}

void append_table(std::ostringstream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) append_row(out, row, widths);
}

std::string tuple_string(const BlockRow& b) {
  return "(defect " + std::to_string(b.defect) + ", dim " + std::to_string(b.dim) + ", LL " +
         std::to_string(b.loewy_length) + ", dim J^2 " + std::to_string(b.dim_j2) + ")";
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

} // namespace

std::string serialize_report(const AnalysisReport& r) {
  ojson j;
  j["kind"] = "analysis";
  ojson body = analysis_to_json(r);
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j.dump(2) + "\n";
}

std::string serialize_report(const ComparisonReport& r) {
  ojson j;
  j["kind"] = "comparison";
  j["group"] = analysis_to_json(r.group);
  j["normalizer"] = analysis_to_json(r.normalizer);
  j["delta"] = r.delta;
  j["dims_equal"] = r.dims_equal;
  j["layers_equal"] = r.layers_equal;
  j["conjecture"] = r.conjecture;
  j["obstruction"] = r.obstruction;
  return j.dump(2) + "\n";
}

AnalysisReport parse_analysis_report(const std::string& text) {
  const ojson j = ojson::parse(text);
  if (j.at("kind") != "analysis")
    throw std::invalid_argument("parse_analysis_report: kind is not \"analysis\"");
  return analysis_from_json(j);
}

ComparisonReport parse_comparison_report(const std::string& text) {
  const ojson j = ojson::parse(text);
  if (j.at("kind") != "comparison")
    throw std::invalid_argument("parse_comparison_report: kind is not \"comparison\"");
  ComparisonReport r;
  r.group = analysis_from_json(j.at("group"));
  r.normalizer = analysis_from_json(j.at("normalizer"));
  r.delta = j.at("delta").get<long long>();
  r.dims_equal = j.at("dims_equal").get<bool>();
  r.layers_equal = j.at("layers_equal").get<bool>();
  r.conjecture = j.at("conjecture").get<bool>();
  r.obstruction = j.at("obstruction").get<bool>();
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.name << ": order " << r.order.get_str() << ", p = " << r.prime << ", route "
      << r.route << ", field GF(" << r.prime;
  if (r.field_degree > 1) out << "^" << r.field_degree;
  out << "), " << r.classes << " classes, TI Sylow: "
      << (r.ti ? yesno(*r.ti) : "unknown") << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"block", "defect", "dim(Z(B))", "LL(Z(B))", "dim(J^2(Z(B)))", "residue",
                  "layers"});
  for (const BlockRow& b : r.blocks)
    rows.push_back({"B" + std::to_string(b.id) + (b.principal ? "*" : ""),
                    std::to_string(b.defect), std::to_string(b.dim),
                    std::to_string(b.loewy_length), std::to_string(b.dim_j2),
                    std::to_string(b.residue_degree), layers_string(b.layer_dims)});
  append_table(out, rows);
  return out.str();
}

std::string render_text(const ComparisonReport& r) {
  std::ostringstream out;
  out << "principal-block comparison at p = " << r.group.prime << ": " << r.group.name
      << " vs " << r.normalizer.name << "\n\n";
  out << render_text(r.group) << "\n" << render_text(r.normalizer) << "\n";
  const BlockRow& bg = r.group.principal_row();
  const BlockRow& bn = r.normalizer.principal_row();
  out << "  B0 " << tuple_string(bg) << "\n";
  out << "  b0 " << tuple_string(bn) << "\n";
  out << "  principal layers: G [" << layers_string(bg.layer_dims) << "]  N ["
      << layers_string(bn.layer_dims) << "]\n";
  out << "  delta(dim J^2) = " << r.delta << "; dims equal: " << yesno(r.dims_equal)
      << "; layers equal: " << yesno(r.layers_equal)
      << "; delta==1: " << yesno(r.conjecture)
      << "; isomorphism excluded by layers: " << yesno(r.obstruction) << "\n";
  return out.str();
}

} // namespace loewy
