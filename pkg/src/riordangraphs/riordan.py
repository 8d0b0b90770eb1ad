"""Riordan matrices modulo 2 and their A-sequences.

A Riordan pair (g, f) with f(0) = 0 defines the lower-triangular matrix
whose (i, j) entry is the coefficient of z^i in g*f^j.  The pair is
proper when g(0) = 1 and f'(0) = 1; a proper matrix is equivalently
described by its binary A-sequence (1, a_1, a_2, ...), related to f by
f = z*A(f), i.e. A = z / fbar with fbar the compositional inverse of f.

Triangles here are 0-indexed.  Graph vertices elsewhere are 1-based; the
conversion happens inside the graph builders, nowhere else.

A-sequence literals are bit strings with a_0 first, e.g. "1100000".
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

from .binseries import BinarySeries, named_series
from .errors import InvertibilityError, LengthError, PrecisionError, UsageError

__all__ = [
    "ASequence",
    "BinaryTriangle",
    "RiordanPair",
    "a_sequence",
    "bell_matrix_from_aseq",
    "binom_mod_p",
    "catalan_bit",
    "catalan_pair",
    "g_from_aseq",
    "io_pattern_extend",
    "is_io_pattern",
    "pascal_pair",
    "riordan_matrix",
]


def catalan_bit(n: int) -> int:
    """Parity of the n-th Catalan number: 1 exactly when n+1 is a power of two."""
    if n < 0:
        raise UsageError(f"index must be nonnegative, got {n}")
    return 1 if (n + 1) & n == 0 else 0


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def binom_mod_p(n: int, m: int, p: int) -> int:
    """Binomial coefficient C(n, m) mod a prime p via base-p digits."""
    if not _is_prime(p):
        raise UsageError(f"modulus must be prime, got {p}")
    if n < 0 or m < 0:
        raise UsageError("binomial arguments must be nonnegative")
    if m > n:
        return 0
    out = 1
    while m:
        nd, md = n % p, m % p
        if md > nd:
            return 0
        out = out * math.comb(nd, md) % p
        n //= p
        m //= p
    return out


class ASequence:
    """A finite prefix (1, a_1, a_2, ...) of a binary A-sequence."""

    __slots__ = ("bits",)

    def __init__(self, bits: Union[Iterable[int], str]):
        if isinstance(bits, str):
            if not bits or set(bits) - {"0", "1"}:
                raise UsageError(f"bad A-sequence literal {bits!r}")
            vals = tuple(int(c) for c in bits)
        else:
            vals = tuple(int(b) for b in bits)
            if any(b not in (0, 1) for b in vals):
                raise UsageError("A-sequence entries must be bits")
        if not vals or vals[0] != 1:
            raise UsageError("a binary A-sequence starts with a_0 = 1")
        self.bits = vals

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ASequence):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"ASequence({self.to_bitstring()!r})"

    def to_bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    def series(self, precision: int | None = None) -> BinarySeries:
        """The generating function A(z) of this prefix."""
        precision = len(self.bits) if precision is None else precision
        if precision > len(self.bits):
            raise LengthError(
                f"A-sequence of length {len(self.bits)} cannot give precision {precision}"
            )
        mask = sum(b << k for k, b in enumerate(self.bits[:precision]))
        return BinarySeries(mask, precision)


def is_io_pattern(a: ASequence) -> bool:
    """True when a fits (1, 1, a2, a2, a4, a4, ...).

    Adjacent entries are constrained in pairs (a_{2j}, a_{2j+1}); a
    trailing unpaired even-indexed entry is free.
    """
    bits = a.bits
    if len(bits) < 2 or bits[1] != 1:
        return False
    for j in range(3, len(bits), 2):
        if bits[j] != bits[j - 1]:
            return False
    return True


def io_pattern_extend(a: ASequence, length: int) -> ASequence:
    """Extend a pattern prefix: odd slots copy their pair opener, new even
    slots get 0 (callers only use positions where that choice cancels out)."""
    if length <= len(a):
        return ASequence(a.bits[:length])
    bits = list(a.bits)
    for i in range(len(bits), length):
        bits.append(bits[i - 1] if i % 2 == 1 else 0)
    return ASequence(bits)


class RiordanPair:
    """A pair (g, f) of series with f(0) = 0."""

    __slots__ = ("g", "f")

    def __init__(self, g: BinarySeries, f: BinarySeries):
        if f.coeff(0) != 0:
            raise UsageError("a Riordan pair needs f(0) = 0")
        self.g = g
        self.f = f

    @property
    def proper(self) -> bool:
        return self.g.coeff(0) == 1 and self.f.precision >= 2 and self.f.coeff(1) == 1

    @property
    def precision(self) -> int:
        return min(self.g.precision, self.f.precision)

    def __repr__(self) -> str:
        return f"RiordanPair(g={self.g.to_bitstring()!r}, f={self.f.to_bitstring()!r})"


def catalan_pair(precision: int) -> RiordanPair:
    """(C, zC) truncated: the pair behind the Catalan graph."""
    c = named_series("catalan", precision)
    return RiordanPair(c, named_series("z", precision).mul(c))


def pascal_pair(precision: int) -> RiordanPair:
    """(1/(1-z), z/(1-z)) truncated: the pair behind the Pascal graph."""
    g = named_series("geometric", precision)
    return RiordanPair(g, named_series("z", precision).mul(g))


class BinaryTriangle:
    """An n x n lower-triangular (0,1) matrix, rows packed as bit masks."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[int]):
        self.order = len(rows)
        self.rows = tuple(r & ((1 << (i + 1)) - 1) for i, r in enumerate(rows))

    def entry(self, i: int, j: int) -> int:
        if not 0 <= j <= i < self.order:
            raise UsageError(f"triangle entry ({i}, {j}) outside order {self.order}")
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> tuple[int, ...]:
        return tuple((self.rows[i] >> j) & 1 for i in range(j, self.order))

    def to_lines(self) -> list[str]:
        return [
            "".join("1" if (r >> j) & 1 else "0" for j in range(i + 1))
            for i, r in enumerate(self.rows)
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryTriangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"BinaryTriangle(order={self.order})"


def riordan_matrix(pair: RiordanPair, n: int) -> BinaryTriangle:
    """Leading n x n block of the matrix of (g, f): entry (i, j) = [z^i] g f^j."""
    if n < 1:
        raise UsageError(f"order must be positive, got {n}")
    if pair.precision < n:
        raise PrecisionError(
            f"pair precision {pair.precision} too small for order {n}"
        )
    g = pair.g.truncate(n)
    f = pair.f.truncate(n)
    col = g
    rows = [0] * n
    for j in range(n):
        bits = col.bits
        for i in range(j, n):
            rows[i] |= ((bits >> i) & 1) << j
        col = col.mul(f)
    return BinaryTriangle(rows)


def bell_matrix_from_aseq(a: ASequence, n: int) -> BinaryTriangle:
    """Order-n Bell-type triangle grown row by row from its A-sequence.

    Row i+1 comes from row i by
        b_{i+1,0}   = a_1 b_{i,0} + a_2 b_{i,1} + ... ,
        b_{i+1,j+1} = b_{i,j} + a_1 b_{i,j+1} + ...   (all mod 2),
    so the entries of rows 0..n-1 consume a_0..a_{n-1}.
    """
    if n < 1:
        raise UsageError(f"order must be positive, got {n}")
    if len(a) < n:
        raise LengthError(f"order {n} needs an A-sequence of length {n}, got {len(a)}")
    amask = sum(b << k for k, b in enumerate(a.bits))
    shifted_a = amask >> 1  # bit j = a_{j+1}
    rows = [1]
    row = 1
    for _ in range(n - 1):
        s = row
        m = shifted_a
        t = 1
        while m:
            if m & 1:
                s ^= row >> t
            m >>= 1
            t += 1
        head = (row & shifted_a).bit_count() & 1
        row = (s << 1) | head
        rows.append(row)
    return BinaryTriangle(rows)


def g_from_aseq(a: ASequence, precision: int) -> BinarySeries:
    """Column 0 of the Bell triangle read back as a series."""
    tri = bell_matrix_from_aseq(a, precision)
    bits = 0
    for i in range(precision):
        bits |= (tri.rows[i] & 1) << i
    return BinarySeries(bits, precision)


def a_sequence(pair: RiordanPair, length: int) -> ASequence:
    """First `length` entries of the A-sequence of a proper pair: z / fbar."""
    if length < 1:
        raise UsageError(f"A-sequence length must be positive, got {length}")
    if not pair.proper:
        raise InvertibilityError("A-sequence extraction needs a proper pair")
    if pair.f.precision < length + 1:
        raise PrecisionError(
            f"f precision {pair.f.precision} too small for A-sequence length {length}"
        )
    fbar = pair.f.truncate(length + 1).comp_inverse()
    unit = BinarySeries(fbar.bits >> 1, length)  # fbar / z, a unit series
    a = unit.reciprocal()
    return ASequence(a.coeffs())
