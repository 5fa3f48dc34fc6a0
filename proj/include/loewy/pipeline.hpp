#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewy/chartab.hpp"
#include "loewy/group.hpp"
#include "loewy/report.hpp"

namespace loewy {

struct AnalyzeOptions {
  // 0 = automatic: extend GF(p) by the lcm of the block residue degrees, so
  // that every block splits; any other value forces GF(p^field_degree).
  std::uint32_t field_degree = 0;
  unsigned threads = 1;
  std::uint64_t max_order = 2'000'000;  // enumeration cap for file/builtin groups
  bool check_ti = true;                 // group route: test the Sylow TI property
};

// Full chain: classes -> center -> splitting extension -> blocks -> per-block
// radical filtrations, defects, principal flag.
AnalysisReport analyze_group(const EnumeratedGroup& g, std::uint64_t p,
                             const AnalyzeOptions& opts = {});
AnalysisReport analyze_table(const CharacterTable& t, std::uint64_t p,
                             const AnalyzeOptions& opts = {});

// Compare the principal block of G with the principal block of N_G(P) for a
// Sylow p-subgroup P.  When the TI check confirms trivially intersecting
// Sylow subgroups, equal principal dimensions are asserted (they are a known
// property of that situation, so a mismatch is an internal error).
ComparisonReport compare_group(const EnumeratedGroup& g, std::uint64_t p,
                               const AnalyzeOptions& opts = {});

// The same from two character tables: one for G, one for N_G(P).  No TI
// information is available on this route; nothing is asserted about it.
ComparisonReport compare_tables(const CharacterTable& tg, const CharacterTable& tn,
                                std::uint64_t p, const AnalyzeOptions& opts = {});

// ---- manifest-driven corpus checking ---------------------------------------

struct CheckEntry {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
};

struct CheckSummary {
  std::vector<CheckEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool ok() const { return failed == 0; }
};

// Runs every manifest entry and diffs the computed principal-block data
// against the expected values.  Entries whose input files are absent are
// reported "skipped", never failed; computation errors become "fail" with
// the message as detail.  File paths in the manifest are resolved relative
// to the manifest's directory.
CheckSummary table_check(const std::string& manifest_path, const AnalyzeOptions& opts = {});

std::string render_text(const CheckSummary& s);
std::string serialize_summary(const CheckSummary& s);

} // namespace loewy
