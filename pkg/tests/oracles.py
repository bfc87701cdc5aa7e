"""Independent oracles. None of these share code paths with the package."""
import cmath
from fractions import Fraction

import numpy as np


def gauss_jordan_rank(rows):
    """Rank over Q by textbook Gauss-Jordan on Fractions."""
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][col] != 0:
                f = A[i][col] / A[rank][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def numeric_rank(rows, tol=1e-8):
    if not rows or not rows[0]:
        return 0
    return int(np.linalg.matrix_rank(np.array(rows, dtype=complex), tol=tol))


def complex_value(s):
    """Numerical value of an exact Scalar, computed from its coefficients."""
    m = s.conductor
    return sum(complex(c) * cmath.exp(2j * cmath.pi * j / m) for j, c in enumerate(s.coeffs))


def is_torsion_numeric(coeffs, tol=1e-6):
    """All roots of an integer polynomial (lowest degree first) are roots of unity.

    A polynomial with no roots in C* (a monomial) counts as torsion.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    deg = len(coeffs) - 1
    if deg <= 0:
        return True
    roots = _cluster(np.roots(coeffs[::-1]))
    bound = 2 * deg * deg
    for r in roots:
        if not 1 - tol <= abs(r) <= 1 + tol:
            return False
        if not any(abs(r ** N - 1) < tol for N in range(1, bound + 1)):
            return False
    return True


def _cluster(roots, radius=1e-3):
    """Replace each tight group of roots by its centroid.

    An m-fold root comes back from np.roots as m points spread by about
    eps^(1/m); their mean is accurate to about eps.
    """
    out = []
    left = list(roots)
    while left:
        r = left.pop()
        group = [r] + [s for s in left if abs(s - r) < radius]
        left = [s for s in left if abs(s - r) >= radius]
        out.append(sum(group) / len(group))
    return out


def product_poly(*polys):
    out = [1]
    for p in polys:
        new = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                new[i + j] += a * b
        out = new
    return out
