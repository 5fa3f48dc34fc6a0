"""End-to-end checks of the Python package against known small groups.

Usage: python test_smoke.py <source-dir>
"""

import sys

import loewy

SRC = sys.argv[1] if len(sys.argv) > 1 else "."
failures = []


def expect(ok, what):
    if not ok:
        failures.append(what)


rep = loewy.analyze_group("builtin:sym3", 3)
expect(rep["kind"] == "analysis", "sym3 kind")
expect(rep["order"] == "6" and rep["prime"] == 3, "sym3 header")
expect(rep["ti"] is True, "sym3 ti")
expect(len(rep["blocks"]) == 1, "sym3 block count")
b = rep["blocks"][0]
expect(b["principal"] and b["defect"] == 1, "sym3 principal block")
expect((b["dim"], b["loewy_length"], b["dim_j2"]) == (3, 2, 0), "sym3 tuple")
expect(b["layer_dims"] == [3, 2, 0], "sym3 layers")

cmp = loewy.compare_group("builtin:sym3", 3)
expect(cmp["kind"] == "comparison", "sym3 comparison kind")
expect(cmp["normalizer"]["name"] == "N_sym3(P)", "sym3 normalizer name")
expect(cmp["delta"] == 0 and cmp["dims_equal"] and cmp["layers_equal"], "sym3 comparison")
expect(not cmp["conjecture"] and not cmp["obstruction"], "sym3 verdicts")

tab = loewy.analyze_table(SRC + "/data/a5.ctbl", 2)
expect(tab["route"] == "table" and tab["ti"] is None, "a5 table route")
expect(tab["order"] == "60" and len(tab["blocks"]) == 2, "a5 blocks")
principal = [x for x in tab["blocks"] if x["principal"]]
expect(len(principal) == 1 and principal[0]["defect"] == 2, "a5 principal")
expect(principal[0]["dim"] == 4 and principal[0]["loewy_length"] == 2, "a5 tuple")

d8 = loewy.analyze_group("builtin:dih8", 2)
expect(d8["blocks"][0]["layer_dims"] == [5, 4, 0], "dih8 layers")
expect(d8["blocks"][0]["defect"] == 3, "dih8 defect")

summary = loewy.check(SRC + "/tests/fixtures/ok.manifest")
expect(summary["kind"] == "check", "check kind")
expect(summary["passed"] == 2 and summary["failed"] == 0 and summary["skipped"] == 1,
       "check counts")

try:
    loewy.analyze_group("builtin:sym3", 6)
    expect(False, "composite characteristic accepted")
except ValueError as e:
    expect("prime" in str(e), "composite characteristic message")

if failures:
    for f in failures:
        print("FAIL", f)
    sys.exit(1)
print("ok (package version %s)" % loewy.__version__)
