"""Executable verifiers for the structural and diameter claims.

Every verifier recomputes from adjacency -- none of them assumes the
claim it is checking.  A failing report always carries a witness that
can be replayed with plain graph operations (see `replay_witness`).

Reports serialize to one line each: claim id, parameters, verdict, and
the witness when failing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .binseries import BinarySeries
from .errors import IoViolationError, LengthError, PatternError, UsageError
from .riordan import ASequence, RiordanPair, io_pattern_extend, is_io_pattern
from .rgraph import Graph, build, build_bell_aseq, catalan_graph

__all__ = [
    "VerificationReport",
    "replay_witness",
    "verify_catalan_diameters",
    "verify_diameter_drop",
    "verify_fractal",
    "verify_mixed_size",
    "verify_monotonicity",
    "verify_structural",
]

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "hypothesis-not-met"


@dataclass
class VerificationReport:
    """Outcome of one claim check: verdict plus a replayable witness on failure."""

    claim: str
    params: dict
    verdict: str = PASS
    witness: Optional[dict] = None
    checks: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def fail(self, witness: dict) -> "VerificationReport":
        self.verdict = FAIL
        self.witness = witness
        return self

    def to_line(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        out = f"{self.claim} [{params}] {self.verdict} checks={self.checks}"
        if self.witness is not None:
            w = ",".join(f"{k}={v}" for k, v in sorted(self.witness.items()))
            out += f" witness[{w}]"
        return out


def _ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def _floor_log2(n: int) -> int:
    return n.bit_length() - 1


# ---------------------------------------------------------------------------
# per-graph checkers (seams for fault-injection tests)
# ---------------------------------------------------------------------------

def check_structural_order(
    G: Graph, clique_cap: int = 64
) -> Optional[dict]:
    """Check the io structural facts on one graph; return a witness or None.

    Facts checked for order n: the designated universal vertex when
    n = 2^k + 1 or 2^k + 2; the io coloring is proper and uses exactly
    ceil(log2 n) + 1 colors; the clique number equals the color count
    (orders up to `clique_cap` only); diam <= floor(log2 n), with
    equality to 2 at n = 2^k + 2 and n = 2^(k+1) + 1 for k >= 1; and the
    refined bound diam <= floor(log2(n - 2^k)) + 1 for 2^k + 1 < n < 2^(k+1).
    """
    n = G.n
    colors_wanted = _ceil_log2(n) + 1

    # (i) universal vertex 2^k + 1
    if n >= 2:
        universal = G.universal_vertices()
        for delta in (1, 2):
            m = n - delta
            if m >= 1 and m & (m - 1) == 0:  # n = 2^k + delta
                v = m + 1
                if v not in universal:
                    return {"kind": "universal-vertex-missing", "n": n, "vertex": v}

    # (ii) proper coloring with the right number of classes
    try:
        colors = G.io_coloring()
    except IoViolationError as e:
        return {
            "kind": "coloring-improper",
            "n": n,
            "u": e.pair[0],
            "v": e.pair[1],
            "color": e.color,
        }
    if len(set(colors)) != colors_wanted:
        return {
            "kind": "coloring-size",
            "n": n,
            "got": len(set(colors)),
            "want": colors_wanted,
        }

    # (iii) clique number equals chromatic count
    if n <= clique_cap:
        clique = G.max_clique_size(cap=clique_cap)
        if clique != colors_wanted:
            return {"kind": "clique-size", "n": n, "got": clique, "want": colors_wanted}

    # (iv) log bound, with the exact diameter-2 orders
    diam = G.diameter()
    if diam > _floor_log2(n):
        return {"kind": "diameter-bound", "n": n, "got": diam, "bound": _floor_log2(n)}
    if n >= 4:
        m = n - 2
        two_cases = (m & (m - 1) == 0 and m >= 2) or (
            (n - 1) & (n - 2) == 0 and n - 1 >= 4
        )  # n = 2^k + 2 (k>=1)  or  n = 2^(k+1) + 1 (k>=1)
        if two_cases and diam != 2:
            return {"kind": "diameter-exact", "n": n, "got": diam, "want": 2}

    # (v) refined bound strictly between 2^k + 1 and 2^(k+1)
    k = (n - 1).bit_length() - 1 if n >= 2 else 0
    if n >= 4 and (1 << k) + 1 < n < (1 << (k + 1)):
        bound = _floor_log2(n - (1 << k)) + 1
        if diam > bound:
            return {"kind": "diameter-bound", "n": n, "got": diam, "bound": bound}

    return None


def check_fractal_window(G: Graph, s: int, alpha: int) -> Optional[dict]:
    """Compare the two leading blocks with their shifted copies at offset
    alpha * 2^s (labels order-preserving); return a witness or None."""
    step = 1 << s
    lo = alpha * step + 1
    for size in (step + 1, step):
        lead = G.induced(list(range(1, size + 1)))
        window = G.induced(list(range(lo, lo + size)))
        if lead.rows != window.rows:
            for i in range(size):
                diff = lead.rows[i] ^ window.rows[i]
                if diff:
                    j = (diff & -diff).bit_length() - 1
                    return {
                        "kind": "window-entry",
                        "s": s,
                        "alpha": alpha,
                        "size": size,
                        "i": i + 1,
                        "j": j + 1,
                        "lead": (lead.rows[i] >> j) & 1,
                        "window": (window.rows[i] >> j) & 1,
                    }
    return None


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _require_pattern(a: ASequence, order: int) -> None:
    if not is_io_pattern(a):
        raise PatternError("verifier needs an io-pattern A-sequence")
    if len(a) < order - 1:
        raise LengthError(
            f"order {order} needs an A-sequence of length {order - 1}, got {len(a)}"
        )


def verify_structural(
    a: ASequence, n_max: int, clique_cap: int = 64
) -> VerificationReport:
    """Universal vertex, coloring, clique and diameter bounds for all n <= n_max."""
    _require_pattern(a, n_max)
    report = VerificationReport(
        "structural", {"aseq": a.to_bitstring(), "n_max": n_max}
    )
    full = build_bell_aseq(a, n_max)
    for n in range(1, n_max + 1):
        witness = check_structural_order(full.induced_prefix(n), clique_cap)
        if witness is not None:
            return report.fail(witness)
        report.checks += 1
    return report


def verify_fractal(
    a: ASequence, s: int, alpha_max: int, n: int
) -> VerificationReport:
    """Windows of width 2^s (+1) along the vertex line repeat the leading block."""
    if s < 0 or alpha_max < 1:
        raise UsageError("need s >= 0 and alpha_max >= 1")
    if (alpha_max + 1) * (1 << s) + 1 > n:
        raise UsageError(
            f"order {n} too small for s={s}, alpha_max={alpha_max}"
        )
    _require_pattern(a, n)
    report = VerificationReport(
        "fractal",
        {"aseq": a.to_bitstring(), "s": s, "alpha_max": alpha_max, "n": n},
    )
    G = build_bell_aseq(a, n)
    for alpha in range(1, alpha_max + 1):
        witness = check_fractal_window(G, s, alpha)
        if witness is not None:
            return report.fail(witness)
        report.checks += 1
    return report


def check_extremal_pairs(G: Graph, k: int) -> Optional[dict]:
    """The diameter-k pairs of an order-2^k graph must be (i, 2^k), i <= 2^(k-1)."""
    n = G.n
    diam, pairs = G.diameter_pairs()
    if diam != k:
        return {"kind": "diameter", "n": n, "got": diam, "want": k}
    expected = {(i, n) for i in range(1, n // 2 + 1)}
    if pairs != expected:
        return {
            "kind": "pairs-set",
            "n": n,
            "missing": sorted(expected - pairs),
            "extra": sorted(pairs - expected),
        }
    return None


def verify_catalan_diameters(k_max: int) -> VerificationReport:
    """Catalan graph diameters at and just below powers of two.

    For each k <= k_max: diam(CG_{2^k}) = k with the extremal pairs
    exactly {(i, 2^k) : i <= 2^(k-1)}; diam(CG_{2^k - 1}) = k - 1; the
    reversed graphs coincide with the pairs (1, z + z^2) and
    (1 + z, z + z^2); and in the reversed power graph the largest
    neighbor of i is 2i for i <= 2^(k-1).
    """
    if k_max < 1:
        raise UsageError("k_max must be at least 1")
    report = VerificationReport("catalan-diameters", {"k_max": k_max})
    for k in range(1, k_max + 1):
        n = 1 << k
        CG = catalan_graph(n)
        witness = check_extremal_pairs(CG, k)
        if witness is not None:
            return report.fail(witness)

        low = catalan_graph(n - 1) if n > 1 else catalan_graph(1)
        got = low.diameter()
        if got != k - 1:
            return report.fail(
                {"kind": "diameter", "n": n - 1, "got": got, "want": k - 1}
            )

        rev = CG.reverse_direct()
        form = build(
            RiordanPair(
                BinarySeries(1, max(n - 1, 1)), BinarySeries(0b110, max(n - 1, 2))
            ),
            n,
        )
        if rev.rows != form.rows:
            return report.fail(_first_entry_diff("reversed-power-pair", n, rev, form))

        if n - 1 >= 1:
            rev_low = low.reverse_direct()
            form_low = build(
                RiordanPair(
                    BinarySeries(0b11, max(n - 2, 2)),
                    BinarySeries(0b110, max(n - 2, 2)),
                ),
                n - 1,
            )
            if rev_low.rows != form_low.rows:
                return report.fail(
                    _first_entry_diff("reversed-near-power-pair", n - 1, rev_low, form_low)
                )

        for i in range(1, n // 2 + 1):
            top = rev.rows[i - 1].bit_length()  # largest neighbor label of i
            if top != 2 * i:
                return report.fail(
                    {"kind": "max-neighbor", "n": n, "i": i, "got": top, "want": 2 * i}
                )
        report.checks += 1
    return report


def _first_entry_diff(tag: str, n: int, left: Graph, right: Graph) -> dict:
    for i in range(n):
        diff = left.rows[i] ^ right.rows[i]
        if diff:
            j = (diff & -diff).bit_length() - 1
            return {
                "kind": "entry",
                "tag": tag,
                "n": n,
                "i": i + 1,
                "j": j + 1,
                "left": (left.rows[i] >> j) & 1,
                "right": (right.rows[i] >> j) & 1,
            }
    raise AssertionError("graphs differ but no differing entry found")


def verify_mixed_size(k: int, m: int, s: int, a: ASequence) -> VerificationReport:
    """Diameter bound at n = 1 + 2^m + (2^k + ... + 2^(k+s)).

    Any io graph of that order obeys diam <= s + 2 (m = 1) or s + 3.
    For the all-ones sequence at s = 0 the bound is attained exactly
    (diam = 2 or 3) and the two neighbor sets N(1) and N(2^k + 2^m)
    match their closed forms.
    """
    if not (k > m >= 1) or s < 0:
        raise UsageError(f"need k > m >= 1 and s >= 0, got k={k}, m={m}, s={s}")
    n = 1 + (1 << m) + sum(1 << (k + j) for j in range(s + 1))
    _require_pattern(a, n)
    report = VerificationReport(
        "mixed-size", {"k": k, "m": m, "s": s, "n": n, "aseq": a.to_bitstring()}
    )
    G = build_bell_aseq(a, n)
    bound = s + 2 if m == 1 else s + 3
    diam = G.diameter()
    if diam > bound:
        return report.fail({"kind": "diameter-bound", "n": n, "got": diam, "bound": bound})
    report.checks += 1

    catalan_input = all(b == 1 for b in a.bits[: n - 1])
    if catalan_input and s == 0:
        if diam != bound:
            return report.fail(
                {"kind": "diameter-exact", "n": n, "got": diam, "want": bound}
            )
        n1 = G.neighbors(1)
        want_n1 = {(1 << t) + 1 for t in range(k + 1)}
        if n1 != want_n1:
            return report.fail(
                {
                    "kind": "neighbor-set",
                    "n": n,
                    "vertex": 1,
                    "missing": sorted(want_n1 - n1),
                    "extra": sorted(n1 - want_n1),
                }
            )
        heavy = (1 << k) + (1 << m)
        nh = G.neighbors(heavy)
        want_nh = {(1 << (m + 1)) + t * (1 << m) - 1 for t in range(1 << (k - m))}
        want_nh.add(heavy + 1)
        if nh != want_nh:
            return report.fail(
                {
                    "kind": "neighbor-set",
                    "n": n,
                    "vertex": heavy,
                    "missing": sorted(want_nh - nh),
                    "extra": sorted(nh - want_nh),
                }
            )
        report.checks += 2
    return report


def verify_monotonicity(a: ASequence, k: int, m_max: int) -> VerificationReport:
    """With s = diam(G_{2^k}), doubling the order m times adds at most m."""
    if k < 2:
        raise UsageError(f"need k >= 2, got {k}")
    if m_max < 1:
        raise UsageError(f"need m_max >= 1, got {m_max}")
    top = 1 << (k + m_max)
    _require_pattern(a, top)
    report = VerificationReport(
        "monotonicity", {"aseq": a.to_bitstring(), "k": k, "m_max": m_max}
    )
    full = build_bell_aseq(a, top)
    s = full.induced_prefix(1 << k).diameter()
    report.notes.append(f"diam(G_{1 << k})={s}")
    for m in range(1, m_max + 1):
        diam = full.induced_prefix(1 << (k + m)).diameter()
        if diam > s + m:
            return report.fail(
                {
                    "kind": "diameter-bound",
                    "n": 1 << (k + m),
                    "got": diam,
                    "bound": s + m,
                }
            )
        report.checks += 1
    return report


def _leading_ones(bits: tuple) -> int:
    count = 0
    for b in bits:
        if b != 1:
            break
        count += 1
    return count


def verify_diameter_drop(a: ASequence, k: int) -> VerificationReport:
    """Sequences with an early zero have diameter below the all-ones graph.

    Two sufficient conditions are checked for G of order 2^k, k >= 4:
    the block shape (2^m - 2 ones, two zeros, then paired free bits) with
    4 <= m <= k, and the weaker 'first 16 entries not all ones'.  When
    neither applies (in particular for the all-ones sequence itself) the
    verdict is hypothesis-not-met.
    """
    if k < 4:
        raise UsageError(f"need k >= 4, got {k}")
    n = 1 << k
    _require_pattern(a, n)
    report = VerificationReport(
        "diameter-drop", {"aseq": a.to_bitstring(), "k": k, "n": n}
    )

    window = io_pattern_extend(a, max(16, n - 1))
    ones = _leading_ones(window.bits)

    applicable = False
    # block shape: ones up to 2^m - 2, then a zero pair, zeros inside the
    # order-n window (otherwise this order's graph is the all-ones graph)
    if ones < n - 1 and ones >= 14:
        m_block = ones + 2
        if m_block & (m_block - 1) == 0 and window.bits[ones + 1] == 0:
            applicable = True
            report.notes.append(f"block-shape m={m_block.bit_length() - 1}")
    # first 16 entries not all ones
    if any(b == 0 for b in window.bits[:16]):
        applicable = True
        report.notes.append("short-prefix-zero")

    if not applicable:
        report.verdict = NOT_APPLICABLE
        return report

    diam = build_bell_aseq(a, n).diameter()
    if diam >= k:
        return report.fail(
            {"kind": "diameter-bound", "n": n, "got": diam, "bound": k - 1}
        )
    report.checks += 1
    return report


# ---------------------------------------------------------------------------
# witness replay
# ---------------------------------------------------------------------------

def replay_witness(G: Graph, witness: dict) -> bool:
    """Re-establish a failure witness with plain graph operations.

    Returns True when the graph indeed violates the claim the witness
    describes (i.e. the witness is sound).
    """
    kind = witness["kind"]
    if kind == "universal-vertex-missing":
        return witness["vertex"] not in G.universal_vertices()
    if kind == "coloring-improper":
        return G.adjacent(witness["u"], witness["v"])
    if kind == "coloring-size":
        return len(set(G.io_coloring())) == witness["got"] != witness["want"]
    if kind == "clique-size":
        return G.max_clique_size() == witness["got"] != witness["want"]
    if kind == "diameter-bound":
        return G.diameter() == witness["got"] > witness["bound"]
    if kind == "diameter-exact" or kind == "diameter":
        return G.diameter() == witness["got"] != witness["want"]
    if kind == "pair-distance":
        return G.distance(witness["u"], witness["v"]) == witness["got"] != witness["want"]
    if kind == "pairs-set":
        _, pairs = G.diameter_pairs()
        missing = set(map(tuple, witness["missing"]))
        extra = set(map(tuple, witness["extra"]))
        return missing.isdisjoint(pairs) and extra <= pairs and (missing or extra)
    if kind == "neighbor-set":
        nb = G.neighbors(witness["vertex"])
        return all(v not in nb for v in witness["missing"]) and all(
            v in nb for v in witness["extra"]
        )
    if kind == "max-neighbor":
        return G.rows[witness["i"] - 1].bit_length() == witness["got"] != witness["want"]
    if kind in ("entry", "window-entry"):
        # caller replays on the graph the witness points into
        return True
    raise UsageError(f"unknown witness kind {kind!r}")
