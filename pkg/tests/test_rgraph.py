import pytest

from riordangraphs.binseries import BinarySeries, from_bitstring, named_series
from riordangraphs.errors import (
    DisconnectedError,
    IoViolationError,
    LengthError,
    PatternError,
    PrecisionError,
    ScaleError,
    UsageError,
)
from riordangraphs.golden import printed_cg4_reverse, printed_cg6, printed_cg8_reverse
from riordangraphs.riordan import ASequence, RiordanPair, catalan_pair
from riordangraphs.rgraph import (
    Graph,
    build,
    build_bell_aseq,
    catalan_graph,
    pascal_graph,
    reverse_formula,
)

from oracles import (
    adj_sets,
    bfs_dists,
    brute_clique,
    diameter_oracle,
    random_io_bits,
    reverse_adj_oracle,
)


def io_graph(bits, n):
    return build_bell_aseq(ASequence(bits), n)


# -- construction ---------------------------------------------------------

def test_build_catalan6_matches_print():
    assert catalan_graph(6).to_matrix_lines() == printed_cg6()


def test_build_identity_pair_is_path():
    G = build(RiordanPair(named_series("one", 8), named_series("z", 8)), 8)
    for u in range(1, 9):
        expected = {v for v in (u - 1, u + 1) if 1 <= v <= 8}
        assert G.neighbors(u) == expected


def test_build_pascal_vertex1_universal():
    G = pascal_graph(8)
    assert 1 in G.universal_vertices()


def test_build_precision_error():
    with pytest.raises(PrecisionError):
        build(catalan_pair(4), 8)


def test_build_bell_aseq_matches_pairs():
    assert io_graph([1] * 7, 8).rows == catalan_graph(8).rows
    assert io_graph([1, 1] + [0] * 5, 8).rows == pascal_graph(8).rows
    path = io_graph([1] + [0] * 6, 8)
    assert path.rows == build(
        RiordanPair(named_series("one", 8), named_series("z", 8)), 8
    ).rows
    with pytest.raises(LengthError):
        io_graph([1, 1, 1], 8)


def test_build_order_one():
    G = catalan_graph(1)
    assert G.n == 1 and G.edge_count() == 0 and G.diameter() == 0


# -- metrics -----------------------------------------------------------------

def test_distance_examples():
    CG8r = catalan_graph(8).reverse_direct()
    assert CG8r.distance(1, 8) == 3
    assert CG8r.distance(4, 4) == 0
    CG16 = catalan_graph(16)
    for i in range(1, 9):
        assert CG16.distance(i, 16) == 4
    with pytest.raises(UsageError):
        CG16.distance(0, 5)
    with pytest.raises(UsageError):
        CG16.distance(1, 17)


def test_distances_report(rng):
    G = io_graph(random_io_bits(rng, 31), 32)
    oracle = bfs_dists(adj_sets(G), 5)
    report = G.distances(5)
    assert report.distance(5) == 0
    for v in range(1, 33):
        assert report.distance(v) == oracle.get(v)
    # sampled triangle inequality
    d17 = G.distances(17)
    for u in range(1, 33, 3):
        du = G.distances(u)
        for v in range(2, 33, 5):
            lhs = d17.distance(v)
            rhs = d17.distance(u) + du.distance(v)
            assert lhs <= rhs


def test_diameter_examples():
    assert pascal_graph(8).diameter() == 2
    assert catalan_graph(64).diameter() == 6


def test_diameter_disconnected():
    G = build(RiordanPair(named_series("one", 8), from_bitstring("00100000")), 5)
    with pytest.raises(DisconnectedError) as err:
        G.diameter()
    u, v = err.value.pair
    assert G.distance(u, v) is None


def test_diameter_against_oracle(rng):
    for _ in range(10):
        n = rng.randint(2, 40)
        G = io_graph(random_io_bits(rng, max(n - 1, 2)), n)
        assert G.diameter() == diameter_oracle(adj_sets(G))


def test_universal_vertices():
    assert catalan_graph(6).universal_vertices() == {3, 5}
    path = build(RiordanPair(named_series("one", 8), named_series("z", 8)), 8)
    assert path.universal_vertices() == set()
    for bits in ([1] * 8, [1, 1] + [0] * 6, [1, 1, 0, 0, 1, 1, 0, 0]):
        assert 9 in io_graph(bits, 9).universal_vertices()


def test_neighbors():
    assert catalan_graph(6).neighbors(4) == {3, 5}
    k, m = 3, 2
    n = 1 + (1 << k) + (1 << m)
    CG = catalan_graph(n)
    assert CG.neighbors(1) == {2, 3, 5, 9}
    heavy = (1 << k) + (1 << m)
    want = {(1 << (m + 1)) + t * (1 << m) - 1 for t in range(1 << (k - m))}
    want.add(heavy + 1)
    assert CG.neighbors(heavy) == want
    k, m = 4, 1
    CG = catalan_graph(1 + (1 << k) + (1 << m))
    assert CG.neighbors(1) == {2, 3, 5, 9, 17}


def test_induced():
    CG6 = catalan_graph(6)
    assert CG6.induced(range(1, 7)).rows == CG6.rows
    odd = CG6.induced([1, 3, 5])
    assert odd.rows == catalan_graph(3).rows  # a triangle
    even = CG6.induced([2, 4, 6])
    assert even.edge_count() == 0
    with pytest.raises(UsageError):
        CG6.induced([3, 1])
    with pytest.raises(UsageError):
        CG6.induced([])


def test_reverse_direct_involution_and_prints(rng):
    assert catalan_graph(4).reverse_direct().to_matrix_lines() == printed_cg4_reverse()
    assert catalan_graph(8).reverse_direct().to_matrix_lines() == printed_cg8_reverse()
    for _ in range(5):
        n = rng.randint(2, 33)
        G = io_graph(random_io_bits(rng, max(n - 1, 2)), n)
        assert G.reverse_direct().reverse_direct().rows == G.rows
        oracle = reverse_adj_oracle(G)
        rev = G.reverse_direct()
        assert all(rev.neighbors(v) == oracle[v] for v in oracle)


def test_reverse_formula_closed_forms():
    for k in (2, 3, 4, 5):
        n = 1 << k
        rf = reverse_formula(ASequence([1] * (n - 1)), n)
        pair_form = build(
            RiordanPair(BinarySeries(1, n - 1), from_bitstring("011" + "0" * (n - 4))),
            n,
        )
        assert rf.rows == pair_form.rows
        m = n - 1
        rf_low = reverse_formula(ASequence([1] * (m - 1)), m)
        low_form = build(
            RiordanPair(
                from_bitstring("11" + "0" * (m - 2)),
                from_bitstring("011" + "0" * (m - 3)),
            ),
            m,
        )
        assert rf_low.rows == low_form.rows


def test_reverse_formula_equals_direct(rng):
    for _ in range(100):
        n = rng.randint(2, 64)
        a = ASequence(random_io_bits(rng, max(n - 1, 2)))
        assert reverse_formula(a, n).rows == build_bell_aseq(a, n).reverse_direct().rows


def test_reverse_formula_rejects_non_pattern():
    with pytest.raises(PatternError):
        reverse_formula(ASequence([1, 0, 1, 1, 1, 1, 1]), 8)


# -- cliques and colorings ------------------------------------------------------

def test_max_clique():
    CG6 = catalan_graph(6)
    assert CG6.max_clique_size() == 4
    assert CG6.max_clique_size() == brute_clique(adj_sets(CG6))
    edgeless = Graph(5, [0] * 5)
    assert edgeless.max_clique_size() == 1
    G32 = io_graph([1] * 31, 32)
    assert G32.max_clique_size() == 6
    with pytest.raises(ScaleError):
        catalan_graph(65).max_clique_size()
    assert catalan_graph(65).max_clique_size(cap=65) == 8


def test_max_clique_against_brute(rng):
    for _ in range(10):
        n = rng.randint(2, 14)
        G = io_graph(random_io_bits(rng, max(n - 1, 2)), n)
        assert G.max_clique_size() == brute_clique(adj_sets(G))


def test_io_coloring_classes():
    colors = io_graph([1] * 7, 8).io_coloring()
    classes = {}
    for v, c in enumerate(colors, start=1):
        classes.setdefault(c, set()).add(v)
    assert {frozenset(s) for s in classes.values()} == {
        frozenset({2, 4, 6, 8}),
        frozenset({3, 7}),
        frozenset({5}),
        frozenset({1}),
    }
    assert len(io_graph([1], 1).io_coloring()) == 1
    colors33 = io_graph([1] * 32, 33).io_coloring()
    assert len(set(colors33)) == 7


def test_io_coloring_detects_violation():
    CG8 = catalan_graph(8)
    rows = list(CG8.rows)
    rows[1] |= 1 << 3  # add edge {2, 4}: two even vertices
    rows[3] |= 1 << 1
    tampered = Graph(8, rows)
    with pytest.raises(IoViolationError) as err:
        tampered.io_coloring()
    u, v = err.value.pair
    assert {u, v} == {2, 4}
    assert tampered.adjacent(u, v)


def test_is_io_decomposable_by_definition():
    for n in range(1, 65):
        assert catalan_graph(n).is_io_decomposable_by_definition()
        assert pascal_graph(n).is_io_decomposable_by_definition()
    bad = io_graph([1, 1, 1, 0, 0, 0, 0], 8)
    assert not bad.is_io_decomposable_by_definition()


def test_io_definition_equals_pattern_for_all_64():
    from riordangraphs.riordan import is_io_pattern
    from itertools import product

    for tail in product([0, 1], repeat=6):
        a = ASequence((1,) + tail)
        G = build_bell_aseq(a, 8)
        assert G.is_io_decomposable_by_definition() == is_io_pattern(a)


def test_bell_graphs_connected(rng):
    # consecutive vertices are always adjacent in proper Bell graphs
    for _ in range(10):
        n = rng.randint(2, 50)
        G = io_graph(random_io_bits(rng, max(n - 1, 2)), n)
        for i in range(1, n):
            assert G.adjacent(i, i + 1)
        G.diameter()  # must not raise


# -- exports ---------------------------------------------------------------------

def test_exports():
    CG6 = catalan_graph(6)
    assert CG6.to_matrix_lines() == printed_cg6()
    dot = CG6.to_dot()
    assert dot.startswith("graph G {") and "3 -- 5;" in dot and dot.endswith("}")
    csv = CG6.edges_csv().splitlines()
    assert csv[0] == "u,v" and f"{3},{4}" in csv
    dcsv = CG6.distances_csv().splitlines()
    assert dcsv[0] == "v,1,2,3,4,5,6"
    assert len(dcsv) == 7 and dcsv[1].startswith("1,0,1,1,")


def test_graph_equality_and_repr():
    a = catalan_graph(6)
    b = catalan_graph(6)
    assert a == b and hash(a) == hash(b)
    assert "n=6" in repr(a)
