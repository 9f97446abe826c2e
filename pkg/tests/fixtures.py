"""Frozen expected values for the worked examples.

Everything here was derived by hand from the defining formulas of the three
example matrices (band matrix, Fulkerson's matrix, differential-operator
matrix) before the library was run, and is kept as plain literals: rows are
{column: value} dicts over exact rationals.
"""

from fractions import Fraction

F1 = Fraction(1)


def bidiag_reduced_row(k):
    """Reduced row k of the band matrix: e_0 + e_1, then (-1)^k e_0 + e_{k+1}."""
    if k == 0:
        return {0: F1, 1: F1}
    return {0: Fraction((-1) ** k), k + 1: F1}


def bidiag_passage_row(k):
    """Alternating-sign lower-triangular passage row: sum (-1)^(k-i) e_i."""
    return {i: Fraction((-1) ** (k - i)) for i in range(k + 1)}


def bidiag_lps_row(i, n):
    """Row i after the leftmost-pivot run over rows 0..n-1: e_i + (-1)^(n-1-i) e_n."""
    return {i: F1, n: Fraction((-1) ** (n - 1 - i))}


# Fulkerson's matrix: rows 0..5.
FULKERSON_INPUT = [
    {2: F1, 3: F1},
    {},
    {3: F1, 5: F1, 6: F1},
    {2: F1, 3: 3 * F1, 5: 2 * F1, 6: 2 * F1},
    {3: F1, 6: F1, 8: F1, 9: F1},
    {2: F1, 3: 5 * F1, 5: F1, 6: 4 * F1, 8: 3 * F1, 9: 3 * F1},
]

# State after processing rows 0..6.
FULKERSON_REDUCED = [
    {2: F1, 3: F1},
    {},
    {2: -F1, 5: F1, 6: F1},
    {},
    {5: -F1, 8: F1, 9: F1},
    {},
    {5: -F1, 11: F1, 12: F1},
]

FULKERSON_PASSAGE = [
    {0: F1},
    {1: F1},
    {0: -F1, 2: F1},
    {0: -F1, 2: -2 * F1, 3: F1},
    {2: -F1, 4: F1},
    {0: -F1, 2: -F1, 4: -3 * F1, 5: F1},
    {2: -F1, 6: F1},
]

FULKERSON_NULLSPACE = [
    {1: F1},
    {0: -F1, 2: -2 * F1, 3: F1},
    {0: -F1, 2: -F1, 4: -3 * F1, 5: F1},
]

# Differential-operator matrix: leading 10x14 prefix.
PDE_INPUT = [
    {},
    {4: F1},
    {4: F1},
    {7: 2 * F1},
    {3: F1, 4: F1, 5: F1, 7: F1, 8: F1},
    {8: 2 * F1},
    {13: 3 * F1},
    {7: 2 * F1, 8: 2 * F1, 9: 2 * F1, 12: 2 * F1, 13: F1},
    {6: 2 * F1, 7: 2 * F1, 8: 2 * F1, 11: F1, 12: 2 * F1},
    {11: 3 * F1},
]

# Quasi-Hermite prefix after the extended run through row 9.
PDE_QHF = [
    {},
    {4: F1},
    {},
    {3: F1, 5: F1},
    {7: F1},
    {8: F1},
    {6: -F1, 9: F1},
    {11: F1},
    {6: F1, 12: F1},
    {13: F1},
]

# Reordered passage rows (same permutation as PDE_QHF).
PDE_QHF_PASSAGE = [
    {0: F1},
    {1: F1},
    {1: -F1, 2: F1},
    {1: -F1, 3: Fraction(-1, 2), 4: F1, 5: Fraction(-1, 2)},
    {3: Fraction(1, 2)},
    {5: Fraction(1, 2)},
    {6: Fraction(-1, 6), 7: Fraction(1, 2), 8: Fraction(-1, 2), 9: Fraction(1, 6)},
    {9: Fraction(1, 3)},
    {3: Fraction(-1, 2), 5: Fraction(-1, 2), 8: Fraction(1, 2), 9: Fraction(-1, 6)},
    {6: Fraction(1, 3)},
]

# Engine-order (unpermuted) reduced rows after stage 9.
PDE_REDUCED = [
    {},
    {4: F1},
    {},
    {7: F1},
    {8: F1},
    {3: F1, 5: F1},
    {13: F1},
    {6: F1, 12: F1},
    {11: F1},
    {6: -F1, 9: F1},
]

# Slot that each engine row lands in after reordering: q_rows[slot] = rows[src].
PDE_PERMUTATION = [0, 1, 2, 5, 3, 4, 9, 8, 7, 6]

# Transformed right-hand sides k_i as {(namespace, index): coeff} term dicts.
BIDIAG_K = [
    {("s", 0): F1},
    {("s", 0): -F1, ("s", 1): F1},
    {("s", 0): F1, ("s", 1): -F1, ("s", 2): F1},
]

FULKERSON_K = [
    {("c", 0): F1},
    {("c", 1): F1},
    {("c", 0): -F1, ("c", 2): F1},
    {("c", 0): -F1, ("c", 2): -2 * F1, ("c", 3): F1},
    {("c", 2): -F1, ("c", 4): F1},
    {("c", 0): -F1, ("c", 2): -F1, ("c", 4): -3 * F1, ("c", 5): F1},
    {("c", 2): -F1, ("c", 6): F1},
]

# Constraints are the k_w of the zero rows w = 1, 3, 5.
FULKERSON_CONSTRAINTS = [FULKERSON_K[1], FULKERSON_K[3], FULKERSON_K[5]]

# Homogeneous solution entries 0..3 for the band matrix: alternating t_0.
BIDIAG_XH = [
    {("t", 0): F1},
    {("t", 0): -F1},
    {("t", 0): F1},
    {("t", 0): -F1},
]

# General solution entries 0..3: x_P + x_H (entry 3 carries -t_0 so that
# row 2 of the system, x_2 + x_3 = s_2, balances).
BIDIAG_GENERAL = [
    {("t", 0): F1},
    {("s", 0): F1, ("t", 0): -F1},
    {("s", 0): -F1, ("s", 1): F1, ("t", 0): F1},
    {("s", 0): F1, ("s", 1): -F1, ("s", 2): F1, ("t", 0): -F1},
]

# Particular solution for Fulkerson: k_{j_i} at pivot column rho_i.
# Pivot columns after stage 12 start 3, 6, 9, 12: the defining row formulas
# give maxs(A_6) = 12, so entry 11 is zero and k_6 sits at column 12.
FULKERSON_XP = {
    3: FULKERSON_K[0],
    6: FULKERSON_K[2],
    9: FULKERSON_K[4],
    12: FULKERSON_K[6],
}

# Homogeneous solution for the operator matrix through index 10
# (free columns 0, 1, 2, 3, 6, 10 carry t_0..t_5).
PDE_XH_PREFIX = [
    {("t", 0): F1},
    {("t", 1): F1},
    {("t", 2): F1},
    {("t", 3): F1},
    {},
    {("t", 3): -F1},
    {("t", 4): F1},
    {},
    {},
    {("t", 4): F1},
    {("t", 5): F1},
]
