#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace loewy {

// One block of the center, in decomposition order (dimension descending,
// then idempotent coordinates).  Layer dims are the radical filtration of
// the block ideal: [dim Z(B), dim J Z(B), dim J^2 Z(B), ..., 0].
struct BlockRow {
  std::size_t id = 0;
  bool principal = false;
  unsigned defect = 0;
  std::size_t dim = 0;
  std::size_t loewy_length = 0;
  std::size_t dim_j2 = 0;
  std::size_t residue_degree = 1;
  std::vector<std::size_t> layer_dims;
};

struct AnalysisReport {
  std::string name;
  mpz_class order;               // group order (serialized as a decimal string)
  std::uint64_t prime = 0;
  std::string route;             // "enumeration" or "table"
  std::uint32_t field_degree = 1;  // coefficient field GF(p^field_degree)
  std::size_t classes = 0;       // number of conjugacy classes = dim of the center
  // Sylow subgroups pairwise intersect trivially; unknown on the table route.
  std::optional<bool> ti;
  std::vector<BlockRow> blocks;

  const BlockRow& principal_row() const;  // throws if no row is flagged
};

// Principal-block comparison between a group G and the Sylow normalizer
// N_G(P); delta is dim J^2 of the principal block of G minus the same for N.
struct ComparisonReport {
  AnalysisReport group;
  AnalysisReport normalizer;
  long long delta = 0;
  bool dims_equal = false;    // principal blocks have equal dimension
  bool layers_equal = false;  // principal layer-dimension vectors coincide
  bool conjecture = false;    // delta == 1
  bool obstruction = false;   // layers differ, so the centers cannot be isomorphic
};

// JSON forms; serialize(parse(s)) == s byte for byte on strings these emit.
std::string serialize_report(const AnalysisReport& r);
std::string serialize_report(const ComparisonReport& r);
AnalysisReport parse_analysis_report(const std::string& text);
ComparisonReport parse_comparison_report(const std::string& text);

// Plain-text tables with the usual block-information columns.
std::string render_text(const AnalysisReport& r);
std::string render_text(const ComparisonReport& r);

} // namespace loewy
