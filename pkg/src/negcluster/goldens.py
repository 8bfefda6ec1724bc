"""Frozen reference data for the rank-3, weight-2 category.

The ten-gon with 15 indecomposables is small enough to check by hand;
the AR-quiver arrow list and the reference extension closure below were
worked out by hand and are cross-validated against the brute-force
oracle by the verification suites.  They serve as golden values for
regression tests and the ``verify`` command.
"""

from __future__ import annotations

from .polygon import Diagonal


def _d(lo: int, hi: int) -> Diagonal:
    return Diagonal(lo, hi)


# The 2-simple-minded system used throughout the demos.
REFERENCE_SMS_E3_W2 = (_d(1, 6), _d(3, 5), _d(7, 9))

# Its extension closure: the three simples plus two length-two objects.
REFERENCE_CLOSURE_E3_W2 = (
    _d(1, 3),
    _d(1, 6),
    _d(1, 9),
    _d(3, 5),
    _d(7, 9),
)

# Complete arrow list of the AR quiver for (rank, weight) = (3, 2).
# Ten short diagonals each with one arrow into the gap-5 row, and five
# gap-5 diagonals each with two arrows back out.
REFERENCE_AR_ARROWS_E3_W2 = tuple(
    ((_d(a, b)), (_d(c, d)))
    for (a, b), (c, d) in [
        ((0, 2), (0, 5)),
        ((0, 5), (0, 8)),
        ((0, 5), (3, 5)),
        ((0, 8), (3, 8)),
        ((1, 3), (1, 6)),
        ((1, 6), (1, 9)),
        ((1, 6), (4, 6)),
        ((1, 9), (4, 9)),
        ((2, 4), (2, 7)),
        ((2, 7), (0, 2)),
        ((2, 7), (5, 7)),
        ((3, 5), (3, 8)),
        ((3, 8), (1, 3)),
        ((3, 8), (6, 8)),
        ((4, 6), (4, 9)),
        ((4, 9), (2, 4)),
        ((4, 9), (7, 9)),
        ((5, 7), (0, 5)),
        ((6, 8), (1, 6)),
        ((7, 9), (2, 7)),
    ]
)
