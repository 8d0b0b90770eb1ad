"""Riordan graphs: construction, metrics, relabellings.

A Riordan graph of order n has vertices labelled 1..n and, below the
diagonal, adjacency r(i, j) = [z^(i-2)] g * f^(j-1) mod 2; the matrix is
symmetrized with a zero diagonal.  Bell-type graphs (f = zg) can instead
be grown from a binary A-sequence.

Adjacency is stored as bit rows: bit j-1 of rows[i-1] says whether
vertices i and j are adjacent.  Vertices are 1-based everywhere in this
module; the 0-based series/triangle layer is converted inside the
builders only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .binseries import BinarySeries
from .errors import (
    DisconnectedError,
    IoViolationError,
    LengthError,
    PatternError,
    PrecisionError,
    ScaleError,
    UsageError,
)
from .riordan import (
    ASequence,
    RiordanPair,
    bell_matrix_from_aseq,
    catalan_pair,
    io_pattern_extend,
    is_io_pattern,
    pascal_pair,
)

__all__ = [
    "DistanceReport",
    "Graph",
    "RiordanGraph",
    "build",
    "build_bell_aseq",
    "catalan_graph",
    "pascal_graph",
    "reverse_formula",
]

DEFAULT_CLIQUE_CAP = 64


@dataclass(frozen=True)
class DistanceReport:
    """BFS distances from one source; None marks unreachable vertices."""

    source: int
    dists: tuple[Optional[int], ...]

    def distance(self, v: int) -> Optional[int]:
        return self.dists[v - 1]


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected graph on vertices 1..n with bit-row adjacency."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise UsageError(f"graph order must be positive, got {n}")
        if len(rows) != n:
            raise UsageError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = tuple(r & ((1 << n) - 1) for r in rows)

    # -- basics ----------------------------------------------------------

    def _check_vertex(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise UsageError(f"vertex {v} outside 1..{self.n}")
        return v - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[self._check_vertex(u)] >> self._check_vertex(v)) & 1)

    def neighbors(self, v: int) -> set[int]:
        """Adjacency row of v as a set of vertex labels."""
        return {b + 1 for b in _iter_bits(self.rows[self._check_vertex(v)])}

    def degree(self, v: int) -> int:
        return self.rows[self._check_vertex(v)].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in _iter_bits(self.rows[i]):
                if j > i:
                    out.append((i + 1, j + 1))
        return out

    def universal_vertices(self) -> set[int]:
        """All vertices adjacent to every other vertex."""
        full = (1 << self.n) - 1
        return {
            i + 1
            for i in range(self.n)
            if self.rows[i] == full ^ (1 << i)
        }

    # -- distances ---------------------------------------------------------

    def distances(self, source: int) -> DistanceReport:
        """BFS levels from `source`; unreachable vertices get None."""
        s = self._check_vertex(source)
        dists: list[Optional[int]] = [None] * self.n
        dists[s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        rows = self.rows
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            d += 1
            for v in _iter_bits(nxt):
                dists[v] = d
            seen |= nxt
            frontier = nxt
        return DistanceReport(source, tuple(dists))

    def distance(self, u: int, v: int) -> Optional[int]:
        """Shortest-path hop count, or None when v is unreachable from u."""
        s = self._check_vertex(u)
        t = self._check_vertex(v)
        if s == t:
            return 0
        seen = 1 << s
        frontier = seen
        target = 1 << t
        d = 0
        rows = self.rows
        while frontier:
            nxt = 0
            for w in _iter_bits(frontier):
                nxt |= rows[w]
            nxt &= ~seen
            d += 1
            if nxt & target:
                return d
            seen |= nxt
            frontier = nxt
        return None

    def eccentricity(self, v: int) -> Optional[int]:
        """Greatest distance from v, or None when some vertex is unreachable."""
        s = self._check_vertex(v)
        full = (1 << self.n) - 1
        seen = 1 << s
        frontier = seen
        d = 0
        rows = self.rows
        while seen != full:
            nxt = 0
            for w in _iter_bits(frontier):
                nxt |= rows[w]
            nxt &= ~seen
            if not nxt:
                return None
            seen |= nxt
            frontier = nxt
            d += 1
        return d

    def diameter(self) -> int:
        """Maximum distance over all vertex pairs; raises on disconnection."""
        best = 0
        for v in range(1, self.n + 1):
            ecc = self.eccentricity(v)
            if ecc is None:
                missing = self._unreached_from(v)
                raise DisconnectedError(v, missing)
            if ecc > best:
                best = ecc
        return best

    def _unreached_from(self, v: int) -> int:
        report = self.distances(v)
        for u in range(1, self.n + 1):
            if report.dists[u - 1] is None:
                return u
        raise AssertionError("graph reported disconnected but all vertices reached")

    def diameter_pairs(self) -> tuple[int, set[tuple[int, int]]]:
        """Diameter together with every unordered pair realizing it."""
        d = self.diameter()
        pairs = set()
        for u in range(1, self.n + 1):
            report = self.distances(u)
            for v in range(u + 1, self.n + 1):
                if report.dists[v - 1] == d:
                    pairs.add((u, v))
        return d, pairs

    # -- subgraphs and relabellings ---------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; `vertices` must be strictly increasing labels.

        Vertex k of the result is the k-th smallest member of `vertices`.
        """
        vs = list(vertices)
        if not vs:
            raise UsageError("induced subgraph needs at least one vertex")
        if any(vs[k] >= vs[k + 1] for k in range(len(vs) - 1)):
            raise UsageError("induced vertex set must be strictly increasing")
        idx = [self._check_vertex(v) for v in vs]
        m = len(idx)
        rows = []
        for i in idx:
            r = self.rows[i]
            rows.append(sum(((r >> j) & 1) << k for k, j in enumerate(idx)))
        return Graph(m, rows)

    def induced_prefix(self, n: int) -> "Graph":
        """Induced subgraph on vertices 1..n (a leading principal block)."""
        self._check_vertex(n)
        mask = (1 << n) - 1
        return Graph(n, [r & mask for r in self.rows[:n]])

    def reverse_direct(self) -> "Graph":
        """Relabel vertex i as n+1-i by permuting the adjacency matrix."""
        n = self.n
        rows = []
        for i in range(n - 1, -1, -1):
            r = self.rows[i]
            rows.append(sum(((r >> (n - 1 - k)) & 1) << k for k in range(n)))
        return Graph(n, rows)

    # -- cliques and colorings ----------------------------------------------

    def max_clique_size(self, cap: int = DEFAULT_CLIQUE_CAP) -> int:
        """Exact maximum clique size by branch and bound on bit sets."""
        if self.n > cap:
            raise ScaleError(
                f"exact clique search capped at order {cap}, graph has {self.n}"
            )
        rows = self.rows
        best = 1  # a single vertex is always a clique

        def expand(cand: int, size: int) -> None:
            nonlocal best
            if size > best:
                best = size
            # greedy coloring of the candidate set: color index bounds any
            # clique inside it, and gives the branching order
            classes = []
            m = cand
            while m:
                cls = 0
                avail = m
                while avail:
                    low = avail & -avail
                    v = low.bit_length() - 1
                    cls |= low
                    avail &= ~rows[v]
                    avail &= ~low
                classes.append(cls)
                m &= ~cls
            seq = []
            for ci, cls in enumerate(classes, start=1):
                for v in _iter_bits(cls):
                    seq.append((ci, v))
            for ci, v in reversed(seq):
                if size + ci <= best:
                    return
                expand(cand & rows[v], size + 1)
                cand &= ~(1 << v)

        expand((1 << self.n) - 1, 0)
        return best

    def io_coloring(self) -> tuple[int, ...]:
        """Color evens 0 and odd v by hops of v -> (v+1)/2 until even.

        Vertex 1 (the fixed point of the halving map) takes the top color,
        so exactly ceil(log2 n) + 1 colors appear.  The assignment is
        verified against the adjacency; an adjacent same-color pair raises
        IoViolationError with the pair as evidence.
        """
        n = self.n
        top = (n - 1).bit_length()  # ceil(log2 n) for n >= 2, 0 for n = 1
        colors = []
        for v in range(1, n + 1):
            if v % 2 == 0:
                colors.append(0)
            elif v == 1:
                colors.append(top)
            else:
                c = 0
                w = v
                while w % 2 == 1:
                    w = (w + 1) // 2
                    c += 1
                colors.append(c)
        class_masks: dict[int, int] = {}
        for i, c in enumerate(colors):
            class_masks[c] = class_masks.get(c, 0) | (1 << i)
        for c, mask in class_masks.items():
            for v in _iter_bits(mask):
                hit = self.rows[v] & mask
                if hit:
                    u = next(_iter_bits(hit))
                    raise IoViolationError(v + 1, u + 1, c)
        return tuple(colors)

    # -- exports -------------------------------------------------------------

    def to_matrix_lines(self) -> list[str]:
        n = self.n
        return [
            "".join("1" if (r >> j) & 1 else "0" for j in range(n))
            for r in self.rows
        ]

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(1, self.n + 1):
            lines.append(f"  {v};")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines)

    def edges_csv(self) -> str:
        return "\n".join(["u,v"] + [f"{u},{v}" for u, v in self.edges()])

    def distances_csv(self) -> str:
        """All-pairs distance matrix as CSV; blank cell = unreachable."""
        header = "v," + ",".join(str(j) for j in range(1, self.n + 1))
        lines = [header]
        for u in range(1, self.n + 1):
            row = self.distances(u).dists
            lines.append(
                f"{u}," + ",".join("" if d is None else str(d) for d in row)
            )
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edge_count()})"


@dataclass(frozen=True)
class Provenance:
    """How a Riordan graph was built: from a pair, or from an A-sequence."""

    kind: str  # "pair" or "aseq"
    pair: Optional[RiordanPair] = None
    aseq: Optional[ASequence] = None


class RiordanGraph(Graph):
    """A Graph that remembers the Riordan data it was built from."""

    __slots__ = ("provenance",)

    def __init__(self, n: int, rows: Sequence[int], provenance: Provenance):
        super().__init__(n, rows)
        self.provenance = provenance

    def rebuild(self, m: int) -> "RiordanGraph":
        """Same provenance at a different (not larger) order."""
        if self.provenance.kind == "pair":
            return build(self.provenance.pair, m)
        return build_bell_aseq(self.provenance.aseq, m)

    def is_io_decomposable_by_definition(self) -> bool:
        """Even vertices induce a null graph and odd vertices induce the
        half-size graph of the same provenance (labels order-preserving)."""
        n = self.n
        evens = list(range(2, n + 1, 2))
        if evens:
            even_mask = sum(1 << (v - 1) for v in evens)
            for v in evens:
                if self.rows[v - 1] & even_mask:
                    return False
        odds = list(range(1, n + 1, 2))
        half = self.rebuild((n + 1) // 2)
        return self.induced(odds).rows == half.rows


def _symmetrized(n: int, below: list[int]) -> list[int]:
    # `below[i]` holds row i's bits strictly below the diagonal
    rows = list(below)
    for i in range(n):
        for j in _iter_bits(below[i]):
            rows[j] |= 1 << i
    return rows


def build(pair: RiordanPair, n: int) -> RiordanGraph:
    """Riordan graph of order n: r(i, j) = [z^(i-2)] g f^(j-1) for i > j."""
    if n < 1:
        raise UsageError(f"graph order must be positive, got {n}")
    if n > 1 and pair.precision < n - 1:
        raise PrecisionError(
            f"pair precision {pair.precision} too small for graph order {n}"
        )
    prov = Provenance("pair", pair=pair)
    if n == 1:
        return RiordanGraph(1, [0], prov)
    g = pair.g.truncate(n - 1)
    f = pair.f.truncate(n - 1)
    below = [0] * n
    col = g
    for j in range(1, n):  # vertex j, using g*f^(j-1)
        bits = col.bits
        for i in range(j + 1, n + 1):  # vertex i > j reads degree i-2
            below[i - 1] |= ((bits >> (i - 2)) & 1) << (j - 1)
        col = col.mul(f)
    return RiordanGraph(n, _symmetrized(n, below), prov)


def build_bell_aseq(a: ASequence, n: int) -> RiordanGraph:
    """Bell-type Riordan graph grown from a binary A-sequence.

    The order-n graph reads triangle rows 0..n-2, so it needs the prefix
    (1, a_1, ..., a_{n-2}): length at least n-1.
    """
    if n < 1:
        raise UsageError(f"graph order must be positive, got {n}")
    prov = Provenance("aseq", aseq=a)
    if n == 1:
        return RiordanGraph(1, [0], prov)
    if len(a) < n - 1:
        raise LengthError(
            f"order {n} needs an A-sequence of length {n - 1}, got {len(a)}"
        )
    tri = bell_matrix_from_aseq(a, n - 1)
    below = [0] * n
    for i in range(2, n + 1):
        below[i - 1] = tri.rows[i - 2]
    return RiordanGraph(n, _symmetrized(n, below), prov)


def catalan_graph(n: int) -> RiordanGraph:
    """CG_n, the Riordan graph of (C, zC)."""
    return build(catalan_pair(max(n - 1, 1)), n)


def pascal_graph(n: int) -> RiordanGraph:
    """PG_n, the Riordan graph of (1/(1-z), z/(1-z))."""
    return build(pascal_pair(max(n - 1, 1)), n)


def reverse_formula(a: ASequence, n: int) -> RiordanGraph:
    """Reverse relabelling of a Bell-type io graph, via its A-sequence.

    Builds the pair (A'(z) * A(z)^(n-2), z / A(z)) directly; for io
    pattern sequences this equals reverse_direct of the grown graph.
    """
    if not is_io_pattern(a):
        raise PatternError("reverse_formula needs an io-pattern A-sequence")
    if len(a) < n - 1:
        raise LengthError(
            f"order {n} needs an A-sequence of length {n - 1}, got {len(a)}"
        )
    if n == 1:
        return build(RiordanPair(a.series(1), BinarySeries(0, 1)), 1)
    # One pattern-extension step: for even n the new slot is the pair
    # closer (determined); for odd n the derivative kills the new slot's
    # coefficient, so the filler value never reaches the result.
    ext = io_pattern_extend(a, n)
    series_a = ext.series(n)
    g = series_a.derivative().mul(series_a.pow(n - 2))
    f = BinarySeries(2, n).mul(series_a.reciprocal())
    return build(RiordanPair(g, f), n)
