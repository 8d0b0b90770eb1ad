"""Run every claim verifier at desk scale.

Each verifier recomputes the claimed facts from adjacency and reports a
pass/fail line; a failure would carry a witness replayable with plain
graph operations.
"""

import random

from riordangraphs import ASequence
from riordangraphs.analysis import (
    verify_catalan_diameters,
    verify_diameter_drop,
    verify_fractal,
    verify_mixed_size,
    verify_monotonicity,
    verify_structural,
)


def random_io_bits(rng, length):
    bits = [1, 1] + [0] * (length - 2)
    for pos in range(2, length, 2):
        b = rng.randint(0, 1)
        bits[pos] = b
        if pos + 1 < length:
            bits[pos + 1] = b
    return bits


def main():
    ones = lambda k: ASequence([1] * k)  # noqa: E731
    pascal = lambda k: ASequence([1, 1] + [0] * (k - 2))  # noqa: E731

    print(verify_structural(ones(63), 64).to_line())
    print(verify_structural(pascal(63), 64).to_line())

    rng = random.Random(7)
    print(verify_structural(ASequence(random_io_bits(rng, 63)), 64).to_line())

    print(verify_fractal(ones(32), 3, 3, 33).to_line())
    print(verify_catalan_diameters(7).to_line())

    print(verify_mixed_size(3, 1, 0, ones(11)).to_line())   # order 11: diam 2
    print(verify_mixed_size(3, 2, 0, ones(13)).to_line())   # order 13: diam 3
    print(verify_mixed_size(4, 2, 1, ASequence(random_io_bits(rng, 52))).to_line())

    print(verify_monotonicity(ones(31), 2, 3).to_line())
    print(verify_monotonicity(pascal(31), 2, 3).to_line())

    # an early zero pair forces the diameter below the all-ones value
    print(verify_diameter_drop(ASequence([1] * 14 + [0] * 17), 5).to_line())
    print(verify_diameter_drop(pascal(15), 4).to_line())
    # the all-ones sequence does not meet either hypothesis
    print(verify_diameter_drop(ones(15), 4).to_line())


if __name__ == "__main__":
    main()
