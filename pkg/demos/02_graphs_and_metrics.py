"""Build Riordan graphs and poke at their geometry.

Shows the order-6 Catalan graph with its adjacency matrix, the reverse
relabelling of the order-8 graph (where the extremal distances are easy
to see), and the clique / coloring structure that makes these graphs
weakly perfect.
"""

from riordangraphs import ASequence, build_bell_aseq, catalan_graph, pascal_graph


def main():
    CG6 = catalan_graph(6)
    print("Catalan graph of order 6:")
    for line in CG6.to_matrix_lines():
        print("   ", line)
    print("universal vertices:", sorted(CG6.universal_vertices()))
    print("odd vertices induce the order-3 graph:",
          CG6.induced([1, 3, 5]).rows == catalan_graph(3).rows)
    print("even vertices induce no edges:", CG6.induced([2, 4, 6]).edge_count() == 0)

    CG8r = catalan_graph(8).reverse_direct()
    print("\nReverse relabelling of the order-8 Catalan graph:")
    for line in CG8r.to_matrix_lines():
        print("   ", line)
    print("distance 1 -> 8 along doubling steps:", CG8r.distance(1, 8))
    diam, pairs = CG8r.diameter_pairs()
    print(f"diameter {diam}, realized by", sorted(pairs))

    print("\nPascal graph facts: vertex 1 universal in PG_8:",
          1 in pascal_graph(8).universal_vertices(),
          "| diam(PG_100) =", pascal_graph(100).diameter())

    G32 = build_bell_aseq(ASequence("1" * 31), 32)
    colors = G32.io_coloring()
    print("\nOrder-32 graph: clique number", G32.max_clique_size(),
          "= color count", len(set(colors)), "= log2(32) + 1")


if __name__ == "__main__":
    main()
