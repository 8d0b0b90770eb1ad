"""Independent oracles the tests check the library against.

Everything here recomputes from first principles with plain lists,
exact big integers, numpy dot products or dict-of-set graphs -- never
through the package's bit-packed code paths.
"""

from collections import deque
from itertools import combinations
import math

import numpy as np


# -- series ---------------------------------------------------------------

def poly_mul_mod2(a, b, prec):
    """Schoolbook Cauchy product mod 2 on coefficient lists."""
    out = [0] * prec
    for i, ai in enumerate(a[:prec]):
        if not ai:
            continue
        for j, bj in enumerate(b[: prec - i]):
            out[i + j] ^= bj
    return out


def poly_mul_ints(a, b, prec):
    """Exact integer Cauchy product on coefficient lists."""
    out = [0] * prec
    for i, ai in enumerate(a[:prec]):
        if not ai:
            continue
        for j, bj in enumerate(b[: prec - i]):
            out[i + j] += ai * bj
    return out


def compose_lists(a, b, prec):
    """a(b(z)) mod 2 by Horner on coefficient lists; assumes b[0] = 0."""
    out = [0] * prec
    for k in reversed(range(min(len(a), prec))):
        out = poly_mul_mod2(out, b, prec)
        out[0] ^= a[k]
    return out


def catalan_ints(n):
    """The first n Catalan numbers, exact."""
    c = [1]
    for i in range(1, n):
        c.append(c[-1] * 2 * (2 * i - 1) // (i + 1))
    return c


def catalan_parity_funceq(n):
    """Catalan parities grown from C = 1 + z*C^2, literal convolution."""
    c = np.zeros(n, dtype=np.int64)
    c[0] = 1
    for m in range(1, n):
        c[m] = int(np.dot(c[:m], c[m - 1 :: -1])) & 1
    return [int(x) for x in c]


def fibonacci_parity(n):
    """Parities of 1/(1 - z - z^2): F_1, F_2, ..."""
    a, b = 1, 1
    out = []
    for _ in range(n):
        out.append(a & 1)
        a, b = b, a + b
    return out


# -- triangles --------------------------------------------------------------

def bell_triangle_lists(bits, n):
    """Bell-type triangle mod 2 by the literal A-sequence recurrence."""
    rows = [[1]]
    for i in range(n - 1):
        prev = rows[-1]
        new = [0] * (i + 2)
        head = 0
        for t in range(1, i + 2):
            if t < len(bits) and bits[t]:
                head ^= prev[t - 1]
        new[0] = head
        for j in range(i + 1):
            v = prev[j]
            for t in range(1, i - j + 1):
                if t < len(bits) and bits[t]:
                    v ^= prev[j + t]
            new[j + 1] = v
        rows.append(new)
    return rows


def pascal_entry(i, j):
    return math.comb(i, j) & 1


def catalan_bell_entry_ints(i, j, cat):
    """[z^i] C * (zC)^j as an exact integer, from exact Catalan numbers."""
    col = list(cat)
    for _ in range(j):
        col = poly_mul_ints(col, [0] + cat, len(cat))
    return col[i]


# -- graphs -------------------------------------------------------------------

def adj_sets(G):
    """Dict-of-sets view of a package graph, for independent traversal."""
    return {v: set(G.neighbors(v)) for v in range(1, G.n + 1)}


def bfs_dists(adj, src):
    """Plain deque BFS on a dict-of-sets graph."""
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def diameter_oracle(adj):
    best = 0
    for v in adj:
        dist = bfs_dists(adj, v)
        if len(dist) != len(adj):
            return None
        best = max(best, max(dist.values()))
    return best


def brute_clique(adj):
    """Exact maximum clique by subset enumeration (small graphs only)."""
    vs = sorted(adj)
    assert len(vs) <= 16
    best = 1
    for size in range(len(vs), 1, -1):
        if size <= best:
            break
        for combo in combinations(vs, size):
            if all(b in adj[a] for a, b in combinations(combo, 2)):
                best = size
                break
        if best == size:
            break
    return best


def reverse_adj_oracle(G):
    """Reverse relabelling as an explicit permutation of a dict-of-sets."""
    n = G.n
    return {
        v: {n + 1 - u for u in G.neighbors(n + 1 - v)} for v in range(1, n + 1)
    }


# -- random inputs --------------------------------------------------------------

def random_io_bits(rng, length):
    """Random io-pattern A-sequence bits of the given length."""
    bits = [1, 1] + [0] * (length - 2)
    for pos in range(2, length, 2):
        b = rng.randint(0, 1)
        bits[pos] = b
        if pos + 1 < length:
            bits[pos + 1] = b
    return bits


def random_unit_bits(rng, precision):
    """Random series coefficients with a(0) = 1."""
    return [1] + [rng.randint(0, 1) for _ in range(precision - 1)]


def random_proper_f_bits(rng, precision):
    """Random series coefficients with f(0) = 0, f'(0) = 1."""
    return [0, 1] + [rng.randint(0, 1) for _ in range(precision - 2)]
