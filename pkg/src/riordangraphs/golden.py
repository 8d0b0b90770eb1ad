"""Golden data: the printed matrices and tables the reproductions diff against.

The files under data/ hold the published reference values verbatim,
anomalies included (one adjacency matrix per graph, one CSV per table).
Reproduction commands recompute everything and annotate each row as
match / mismatch / conflicting-print / absent, so print anomalies are
first-class output rather than silent test fixtures.
"""

from __future__ import annotations

from importlib import resources

__all__ = [
    "printed_cg4_reverse",
    "printed_cg6",
    "printed_cg8_reverse",
    "printed_counterexamples",
    "printed_table1",
    "printed_table2",
]


def _read(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text()


def _matrix(name: str) -> list[str]:
    return _read(name).split()


def printed_cg6() -> list[str]:
    """Adjacency rows of the order-6 Catalan graph as published."""
    return _matrix("printed_cg6.txt")


def printed_cg4_reverse() -> list[str]:
    """Published adjacency of the reversed order-4 Catalan graph."""
    return _matrix("printed_cg4r.txt")


def printed_cg8_reverse() -> list[str]:
    """Published adjacency of the reversed order-8 Catalan graph."""
    return _matrix("printed_cg8r.txt")


def printed_counterexamples() -> list[tuple[int, int, int]]:
    """The published 13 orders where the sixteen-ones family beats CG_n."""
    lines = _read("printed_counterexamples.csv").strip().splitlines()[1:]
    return [tuple(int(x) for x in line.split(",")) for line in lines]


def _table(name: str) -> list[tuple[str, int]]:
    lines = _read(name).strip().splitlines()[1:]
    out = []
    for line in lines:
        seq, diam = line.split(",")
        out.append((seq, int(diam)))
    return out


def printed_table1() -> list[tuple[str, int]]:
    """Published (A-sequence, diam G_8) rows; 9 rows for 8 patterns,
    one sequence printed twice with conflicting values."""
    return _table("printed_table1.csv")


def printed_table2() -> list[tuple[str, int]]:
    """Published (A-sequence, diam G_16) rows for the first-six-ones
    patterns; 31 rows, one duplicated, two of the 32 patterns omitted."""
    return _table("printed_table2.csv")
