"""Enumeration of io A-sequences and the conjecture-scan harness.

Scans are deterministic: records come out sorted by (order, free-bit
lexicographic position of the A-sequence) no matter how many worker
processes ran.  A budget guard refuses scans whose estimated BFS work
(vertex visits, roughly sum of n^2 over all scanned graphs) exceeds the
configured limit.

CSV schema for scan records: n,aseq,diam,diam_catalan,diam_pascal,verdict
with exit semantics: a scan "fails" exactly when violations were found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterator, Optional, Sequence

from .errors import ScaleError, UsageError
from .riordan import ASequence
from .rgraph import build_bell_aseq, catalan_graph, pascal_graph

__all__ = [
    "ConjectureReport",
    "SearchRecord",
    "TableReproduction",
    "counterexample_family",
    "enumerate_io_aseqs",
    "mixed_size_orders",
    "reproduce_counterexamples",
    "reproduce_tables",
    "scan_conjecture1",
    "scan_conjecture2",
    "scan_conjecture3",
]

DEFAULT_BUDGET = 10**8

WITHIN = "within-bounds"
UPPER = "upper-violation"
LOWER = "lower-violation"


@dataclass(frozen=True)
class SearchRecord:
    """One diameter datum from a scan."""

    n: int
    aseq: str
    diam: int
    diam_catalan: int
    diam_pascal: int
    verdict: str

    def to_csv(self) -> str:
        return f"{self.n},{self.aseq},{self.diam},{self.diam_catalan},{self.diam_pascal},{self.verdict}"


CSV_HEADER = "n,aseq,diam,diam_catalan,diam_pascal,verdict"


@dataclass
class ConjectureReport:
    """Outcome of one conjecture scan."""

    conjecture: str
    params: dict
    records: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "records": len(self.records),
            "violations": len(self.violations),
        }

    def to_csv_lines(self) -> list[str]:
        return [CSV_HEADER] + [r.to_csv() for r in self.records]


def free_positions(length: int) -> list[int]:
    """Indices of the free bits of a length-`length` io pattern (a2, a4, ...)."""
    return list(range(2, length, 2))


def enumerate_io_aseqs(length: int) -> Iterator[ASequence]:
    """All io-pattern A-sequences of a given length.

    Yields 2^ceil((length-2)/2) sequences in lexicographic order of their
    free bits (a2, a4, ...); a trailing unpaired even slot is free too.
    """
    if length < 2:
        raise UsageError(f"pattern sequences need length >= 2, got {length}")
    frees = free_positions(length)
    for value in range(1 << len(frees)):
        bits = [1, 1] + [0] * (length - 2)
        for rank, pos in enumerate(frees):
            b = (value >> (len(frees) - 1 - rank)) & 1
            bits[pos] = b
            if pos + 1 < length:
                bits[pos + 1] = b
        yield ASequence(bits)


def counterexample_family(length: int, ones: int = 16) -> ASequence:
    """The A-sequence with a block of leading ones, zero afterwards."""
    if length < ones:
        raise UsageError(f"length {length} shorter than the block of {ones} ones")
    return ASequence([1] * ones + [0] * (length - ones))


def _guard(estimate: int, budget: int) -> None:
    if estimate > budget:
        raise ScaleError(
            f"scan estimate {estimate} vertex-visits exceeds budget {budget}"
        )


def _prefix_diameters(a: ASequence, n_max: int, orders: Sequence[int]) -> dict[int, int]:
    full = build_bell_aseq(a, n_max)
    return {n: full.induced_prefix(n).diameter() for n in orders}


def _family_diameters(builder, n_max: int, orders: Sequence[int]) -> dict[int, int]:
    full = builder(n_max)
    return {n: full.induced_prefix(n).diameter() for n in orders}


# -- worker functions (module level so they pickle) --------------------------

def _conj1_chunk(args):
    seq_bits, n_max, orders = args
    out = []
    for bits in seq_bits:
        diams = _prefix_diameters(ASequence(bits), n_max, orders)
        out.append((bits, diams))
    return out


def _conj2_chunk(args):
    seq_bits, n = args
    out = []
    for bits in seq_bits:
        out.append((bits, build_bell_aseq(ASequence(bits), n).diameter()))
    return out


def _run_chunks(worker, chunks, jobs: int):
    if jobs <= 1 or len(chunks) <= 1:
        return [worker(c) for c in chunks]
    with Pool(processes=jobs) as pool:
        return pool.map(worker, chunks)


def _chunked(items: list, jobs: int) -> list:
    if jobs <= 1:
        return [items]
    size = max(1, (len(items) + jobs - 1) // jobs)
    return [items[i : i + size] for i in range(0, len(items), size)]


# -- scans --------------------------------------------------------------------

def scan_conjecture1(
    n_max: int,
    a_len: Optional[int] = None,
    sequences: Optional[Sequence[ASequence]] = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> ConjectureReport:
    """Compare diam(G_n) against diam(PG_n) = 2 and diam(CG_n) for 4 <= n <= n_max.

    Scans every io pattern of length `a_len` (which must determine every
    scanned order: a_len >= n_max - 1), or an explicit list of sequences.
    Upper violations are orders with diam(G_n) > diam(CG_n); lower
    violations have diam(G_n) < 2.  Non-Pascal sequences that stay at
    diameter 2 for every scanned order are reported as uniqueness
    candidates in extras["diameter2_everywhere"].
    """
    if n_max < 4:
        raise UsageError("n_max must be at least 4")
    orders = list(range(4, n_max + 1))
    work = sum(n * n for n in orders)
    if sequences is None:
        if a_len is None:
            raise UsageError("need a_len or an explicit sequence list")
        if a_len < n_max - 1:
            raise UsageError(
                f"a_len {a_len} cannot determine graphs up to order {n_max}"
            )
        # guard before materializing: the pattern space is exponential
        _guard(((1 << len(free_positions(a_len))) + 2) * work, budget)
        sequences = list(enumerate_io_aseqs(a_len))
    else:
        sequences = list(sequences)
        for a in sequences:
            if len(a) < n_max - 1:
                raise UsageError(
                    f"sequence {a.to_bitstring()} too short for order {n_max}"
                )
        _guard((len(sequences) + 2) * work, budget)

    ref_catalan = _family_diameters(catalan_graph, n_max, orders)
    ref_pascal = _family_diameters(pascal_graph, n_max, orders)

    chunks = [
        (tuple(a.bits for a in chunk), n_max, orders)
        for chunk in _chunked(sequences, jobs)
        if chunk
    ]
    results = _run_chunks(_conj1_chunk, chunks, jobs)

    report = ConjectureReport(
        "1",
        {"n_max": n_max, "sequences": len(sequences)},
    )
    per_seq = [pair for chunk in results for pair in chunk]
    diameter2 = []
    for bits, diams in per_seq:
        name = "".join(map(str, bits))
        always_two = True
        for n in orders:
            d = diams[n]
            if d > ref_catalan[n]:
                verdict = UPPER
            elif d < 2:
                verdict = LOWER
            else:
                verdict = WITHIN
            if d != 2:
                always_two = False
            rec = SearchRecord(n, name, d, ref_catalan[n], ref_pascal[n], verdict)
            report.records.append(rec)
            if verdict != WITHIN:
                report.violations.append(rec)
        is_pascal = bits[0] == 1 and bits[1] == 1 and not any(bits[2:])
        if always_two and not is_pascal:
            diameter2.append(name)
    report.records.sort(key=lambda r: (r.n, r.aseq))
    report.violations.sort(key=lambda r: (r.n, r.aseq))
    report.extras["diameter2_everywhere"] = diameter2
    report.extras["pascal_reference"] = ref_pascal
    return report


def scan_conjecture2(
    k: int,
    sample: Optional[int] = None,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    exhaustive_max_k: int = 5,
) -> ConjectureReport:
    """Which io patterns of order n = 2^k reach the extremal diameter k?

    Enumerates the full determining space (length 2^k - 1 patterns,
    trailing bit free) for k <= exhaustive_max_k, or a seeded random
    sample beyond.  The conjecture expects the all-ones sequence to be
    the only graph attaining diameter k; any other attainer is recorded
    as a violation.  Sequence identity is adjacency identity under the
    canonical labels, not abstract isomorphism.
    """
    if k < 1:
        raise UsageError("k must be at least 1")
    n = 1 << k
    length = n - 1 if n > 2 else 2
    exhaustive = k <= exhaustive_max_k and sample is None
    if exhaustive:
        _guard((1 << len(free_positions(length))) * n * n, budget)
        sequences = list(enumerate_io_aseqs(length))
    else:
        count = sample if sample is not None else 4096
        rng = random.Random(seed)
        frees = free_positions(length)
        seen = set()
        all_ones_value = (1 << len(frees)) - 1
        seen.add(all_ones_value)  # always include the Catalan prefix
        while len(seen) < min(count, 1 << len(frees)):
            seen.add(rng.getrandbits(len(frees)))
        values = sorted(seen)
        sequences = []
        for value in values:
            bits = [1, 1] + [0] * (length - 2)
            for rank, pos in enumerate(frees):
                b = (value >> (len(frees) - 1 - rank)) & 1
                bits[pos] = b
                if pos + 1 < length:
                    bits[pos + 1] = b
            sequences.append(ASequence(bits))
    _guard(len(sequences) * n * n, budget)

    ref_catalan = catalan_graph(n).diameter()
    ref_pascal = pascal_graph(n).diameter()

    chunks = [
        (tuple(a.bits for a in chunk), n)
        for chunk in _chunked(sequences, jobs)
        if chunk
    ]
    results = _run_chunks(_conj2_chunk, chunks, jobs)

    report = ConjectureReport(
        "2",
        {
            "k": k,
            "n": n,
            "sequences": len(sequences),
            "exhaustive": exhaustive,
        },
    )
    ones = "1" * length
    attainers = []
    for bits, diam in (pair for chunk in results for pair in chunk):
        name = "".join(map(str, bits))
        attains = diam == k
        if attains:
            attainers.append(name)
        verdict = UPPER if attains and name != ones else WITHIN
        rec = SearchRecord(n, name, diam, ref_catalan, ref_pascal, verdict)
        report.records.append(rec)
        if verdict != WITHIN:
            report.violations.append(rec)
    report.records.sort(key=lambda r: r.aseq)
    report.violations.sort(key=lambda r: r.aseq)
    report.extras["attainers"] = sorted(attainers)
    report.extras["all_ones_attains"] = ones in attainers
    return report


def mixed_size_orders(n_max: int) -> list[tuple[int, int, int, int]]:
    """All (n, k, m, s) with n = 1 + 2^m + (2^k + ... + 2^(k+s)) <= n_max,
    k > m >= 1 and s >= 1.  The decomposition of n - 1 into an isolated
    low bit plus one run of consecutive higher bits is unique."""
    out = []
    for n in range(8, n_max + 1):
        r = n - 1
        m = (r & -r).bit_length() - 1
        if m < 1:
            continue
        rest = r ^ (1 << m)
        if rest == 0:
            continue
        k = (rest & -rest).bit_length() - 1
        top = rest.bit_length() - 1
        if rest != ((1 << (top + 1)) - 1) ^ ((1 << k) - 1):
            continue
        s = top - k
        if k > m and s >= 1:
            out.append((n, k, m, s))
    return out


def scan_conjecture3(
    n_max: int, budget: int = DEFAULT_BUDGET
) -> ConjectureReport:
    """diam(CG_n) = s + 2 (m = 1) or s + 3 at the admissible mixed orders."""
    if n_max < 8:
        raise UsageError("n_max must be at least 8")
    orders = mixed_size_orders(n_max)
    _guard(sum(n * n for n, _, _, _ in orders) + n_max * n_max, budget)
    full = catalan_graph(n_max) if orders else None
    report = ConjectureReport("3", {"n_max": n_max, "orders": len(orders)})
    for n, k, m, s in orders:
        want = s + 2 if m == 1 else s + 3
        got = full.induced_prefix(n).diameter()
        if got == want:
            verdict = WITHIN
        elif got > want:
            verdict = UPPER
        else:
            verdict = LOWER
        rec = SearchRecord(n, f"catalan(k={k},m={m},s={s})", got, want, 2, verdict)
        report.records.append(rec)
        if verdict != WITHIN:
            report.violations.append(rec)
    return report


# -- reproductions -------------------------------------------------------------

def reproduce_counterexamples(n_max: int = 100) -> list[tuple[int, int, int]]:
    """Rows (n, diam(CG_n), diam(G_n)) where the sixteen-ones family
    exceeds the Catalan diameter, for 4 <= n <= n_max."""
    a = counterexample_family(max(n_max - 1, 16))
    fam = build_bell_aseq(a, n_max)
    cat = catalan_graph(n_max)
    rows = []
    for n in range(4, n_max + 1):
        dg = fam.induced_prefix(n).diameter()
        dc = cat.induced_prefix(n).diameter()
        if dg > dc:
            rows.append((n, dc, dg))
    return rows


@dataclass
class TableRow:
    aseq: str
    diam: int
    status: str  # match | conflicting-print | mismatch | absent-from-print
    printed: tuple[int, ...]


@dataclass
class TableReproduction:
    """Recomputed table next to its printed version, with anomaly notes."""

    name: str
    rows: list
    duplicates: list  # (aseq, times printed, printed values)
    omitted: list  # enumerated sequences the printed table lacks
    foreign: list  # printed sequences outside the enumeration

    @property
    def genuine_mismatches(self) -> list:
        return [r for r in self.rows if r.status == "mismatch"]


def _reproduce_table(
    name: str,
    computed: list[tuple[str, int]],
    printed: list[tuple[str, int]],
) -> TableReproduction:
    printed_by_seq: dict[str, list[int]] = {}
    for seq, diam in printed:
        printed_by_seq.setdefault(seq, []).append(diam)
    rows = []
    for seq, diam in computed:
        values = tuple(printed_by_seq.get(seq, ()))
        if not values:
            status = "absent-from-print"
        elif len(set(values)) > 1:
            status = "conflicting-print"
        elif values[0] == diam:
            status = "match"
        else:
            status = "mismatch"
        rows.append(TableRow(seq, diam, status, values))
    duplicates = [
        (seq, len(vals), tuple(vals))
        for seq, vals in printed_by_seq.items()
        if len(vals) > 1
    ]
    computed_seqs = {seq for seq, _ in computed}
    omitted = [seq for seq, _ in computed if seq not in printed_by_seq]
    foreign = sorted(set(printed_by_seq) - computed_seqs)
    return TableReproduction(name, rows, duplicates, omitted, foreign)


def reproduce_tables() -> tuple[TableReproduction, TableReproduction]:
    """Recompute both printed diameter tables and diff them against print.

    Table "diam8": all 8 patterns of length 7 at order 8.  Table
    "diam16": the 32 patterns of length 15 whose first six entries are
    ones, at order 16.  The printed versions ship as golden data; the
    recomputed values are authoritative.
    """
    from .golden import printed_table1, printed_table2

    computed1 = [
        (a.to_bitstring(), build_bell_aseq(a, 8).diameter())
        for a in enumerate_io_aseqs(7)
    ]
    computed2 = [
        (a.to_bitstring(), build_bell_aseq(a, 16).diameter())
        for a in enumerate_io_aseqs(15)
        if a.bits[:6] == (1, 1, 1, 1, 1, 1)
    ]
    return (
        _reproduce_table("diam8", computed1, printed_table1()),
        _reproduce_table("diam16", computed2, printed_table2()),
    )
