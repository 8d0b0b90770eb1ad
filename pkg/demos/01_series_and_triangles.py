"""Series arithmetic over GF(2) and the two roads to a Riordan triangle.

Walks through the coefficient layer: named series, the Catalan
functional equation, A-sequence extraction, and the check that the
Bell-type recurrence rebuilds the same triangle that coefficient
extraction produces.
"""

from riordangraphs import (
    ASequence,
    a_sequence,
    bell_matrix_from_aseq,
    catalan_pair,
    named_series,
    pascal_pair,
    riordan_matrix,
)


def main():
    c = named_series("catalan", 16)
    print("Catalan series mod 2, degree 0..15: ", c.to_bitstring())
    print("ones sit exactly at degrees 2^j - 1:",
          [k for k in range(16) if c.coeff(k)])

    one = named_series("one", 16)
    z = named_series("z", 16)
    print("C = 1 + z*C^2 holds coefficientwise:",
          one.add(z.mul(c).mul(c)) == c)

    print("\nA-sequences recovered from the pairs themselves:")
    print("  (C, zC)       ->", a_sequence(catalan_pair(17), 8).to_bitstring())
    print("  Pascal pair   ->", a_sequence(pascal_pair(17), 8).to_bitstring())

    print("\nPascal triangle mod 2 (order 8), coefficient extraction:")
    tri = riordan_matrix(pascal_pair(8), 8)
    for line in tri.to_lines():
        print("   ", line)
    rebuilt = bell_matrix_from_aseq(ASequence("11000000"), 8)
    print("Bell recurrence from A-sequence 1100... rebuilds it:", rebuilt == tri)

    print("\nCatalan triangle (order 8) from the all-ones A-sequence:")
    for line in bell_matrix_from_aseq(ASequence("1" * 8), 8).to_lines():
        print("   ", line)
    print("matches coefficient extraction:",
          bell_matrix_from_aseq(ASequence("1" * 8), 8) == riordan_matrix(catalan_pair(8), 8))


if __name__ == "__main__":
    main()
