"""Published reference lists and tables for complete Padovan sequences.

Used to re-orient emitted table rows (``--match-paper``) and by the
acceptance suite.  Values are transcribed verbatim, including entries that
disagree with recomputation; see the project notes for the discrepancies.
"""

from __future__ import annotations

# Primes < 1000 listed as admitting a complete Padovan sequence with f having fewer than three roots.
SINGLE_ROOT_PRIMES = (
    7, 11, 17, 37, 67, 83, 113, 199, 227, 241, 251, 271, 283, 367, 373, 401, 433, 457,
    479, 569, 571, 593, 613, 643, 659, 701, 727, 743, 757, 769, 839, 919, 941, 977,
)

# Primes < 1000 listed as admitting one with three distinct roots.
THREE_ROOT_PRIMES = (
    59, 101, 167, 173, 211, 271, 307, 317, 593, 599,
    607, 691, 719, 809, 821, 829, 853, 877, 883, 991, 997,
)

# (p, alpha, beta, N, k_min, (p-1)/N, j0, j0')
PAIR_TABLE = (
    (59, 13, 42, 29, 10, 2, 7, 3),
    (101, 20, 89, 20, 20, 5, 16, 4),
    (101, 89, 93, 25, 8, 4, 7, 1),
    (167, 134, 73, 83, 14, 2, 5, 9),
    (173, 97, 110, 86, 10, 2, 1, 9),
    (211, 205, 97, 15, 14, 14, 3, 11),
    (211, 97, 120, 42, 30, 5, 6, 24),
    (271, 145, 46, 135, 22, 2, 17, 5),
    (307, 157, 50, 17, 18, 18, 11, 7),
    (307, 50, 100, 102, 15, 3, 4, 11),
    (307, 100, 157, 102, 45, 3, 3, 42),
)

# Primes < 10^5 listed as exceptional.
EXCEPTIONAL_PRIMES = (307, 5851, 24697, 34961, 87623, 98801)

# Listed as covered by the relaxed bound.
WEAK_COVERED_PRIMES = (307, 87623)

# (p, N, k_min, j0, j0', ell)
EXCEPTIONAL_TABLE = (
    (307, 17, 18, 11, 7, 0),
    (5851, 39, 150, 4, 29, 3),
    (24697, 63, 392, 59, 18, 5),
    (34961, 92, 380, 89, 15, 3),
    (87623, 227, 386, 175, 211, 0),
    (98801, 52, 1900, 47, 33, 35),
)


def pair_orientation(p: int, alpha: int, beta: int) -> tuple[int, int]:
    """The published orientation of an unordered pair, or ``(alpha, beta)`` if unlisted."""
    for row in PAIR_TABLE:
        if row[0] == p and {row[1], row[2]} == {alpha, beta}:
            return row[1], row[2]
    return alpha, beta


def exceptional_flip(p: int, N: int, j0: int, j0_prime: int) -> bool:
    """True when the published row lists ``(j0, j0')`` swapped relative to ours."""
    for row in EXCEPTIONAL_TABLE:
        if row[0] == p and row[1] == N:
            return (row[3], row[4]) == (j0_prime, j0) and j0 != j0_prime
    return False
