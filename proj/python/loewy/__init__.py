"""Exact Loewy structure of centers of blocks of modular group algebras.

Every function wraps the C++ engine and returns plain dicts decoded from its
canonical JSON reports (see docs/report-schema.md in the source tree).
"""

import json as _json

from loewy._core import __version__
from loewy import _core

__all__ = [
    "__version__",
    "analyze_group",
    "analyze_table",
    "compare_group",
    "compare_tables",
    "check",
]


def analyze_group(spec, prime, field_degree=0, threads=1, max_order=2_000_000, check_ti=True):
    """Block analysis of Z(kG) for ``builtin:<name>``, ``file:<path>``, or a path."""
    return _json.loads(
        _core.analyze_group(spec, prime, field_degree, threads, max_order, check_ti)
    )


def analyze_table(path, prime, field_degree=0, threads=1):
    """Block analysis of Z(kG) from a character table file."""
    return _json.loads(_core.analyze_table(path, prime, field_degree, threads))


def compare_group(spec, prime, field_degree=0, threads=1, max_order=2_000_000, check_ti=True):
    """Compare the principal block of G with that of its Sylow p-normalizer."""
    return _json.loads(
        _core.compare_group(spec, prime, field_degree, threads, max_order, check_ti)
    )


def compare_tables(group_path, normalizer_path, prime, field_degree=0, threads=1):
    """Principal-block comparison from two character table files."""
    return _json.loads(
        _core.compare_tables(group_path, normalizer_path, prime, field_degree, threads)
    )


def check(manifest_path, threads=1, max_order=2_000_000):
    """Run a corpus manifest; entries with absent input files are skipped."""
    return _json.loads(_core.check(manifest_path, threads, max_order))
