# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exact linear algebra over the rationals and over commutative rings.

Rational routines work on lists of rows and return :class:`fractions.Fraction`
entries. The determinant routines are ring-generic: entries only need ``+``,
``-``, ``*`` and truth testing (zero is falsy), and Bareiss elimination
additionally needs an exact division callable.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd

logger = logging.getLogger(__name__)


def _as_fractions(rows):
    return [[Fraction(entry) for entry in row] for row in rows]


def row_echelon(rows):
    """Compute the reduced row echelon form of a rational matrix.

    Parameters
    ----------
    rows : sequence of sequences
        The matrix, given as rows of rationals or integers.

    Returns
    -------
    tuple
        ``(echelon, pivots)`` where ``echelon`` holds the nonzero rows of the
        reduced form and ``pivots`` the pivot column of each of those rows.

    """
    matrix = _as_fractions(rows)
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        scale = matrix[row][col]
        matrix[row] = [entry / scale for entry in matrix[row]]
        for r in range(len(matrix)):
            if r != row and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row])]
        pivots.append(col)
        row += 1
        if row == len(matrix):
            break
    return matrix[:row], pivots


def rank(rows):
    """Return the rank of a rational matrix."""
    return len(row_echelon(rows)[1])


def primitive(vector):
    """Scale a rational vector to the primitive integer vector on its ray.

    The zero vector is returned unchanged (as integers).
    """
    vector = [Fraction(entry) for entry in vector]
    denominators = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vector), 1)
    integers = [int(v * denominators) for v in vector]
    common = reduce(gcd, (abs(v) for v in integers), 0)
    if common == 0:
        return tuple(integers)
    return tuple(v // common for v in integers)


def nullspace(rows, ncols=None):
    """Return an integer basis of the right kernel of a rational matrix.

    Parameters
    ----------
    rows : sequence of sequences
        The matrix. May be empty, in which case ``ncols`` is required.
    ncols : int
        Number of columns. (Default value = None, taken from the first row)

    Returns
    -------
    list of tuple
        Primitive integer vectors spanning the kernel, one per free column.

    """
    if ncols is None:
        ncols = len(rows[0])
    echelon, pivots = row_echelon(rows) if rows else ([], [])
    free = [col for col in range(ncols) if col not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row, p in zip(echelon, pivots):
            vector[p] = -row[f]
        basis.append(primitive(vector))
    return basis


def solve(matrix, rhs):
    """Solve a square rational system with a unique solution.

    Returns
    -------
    tuple of :class:`fractions.Fraction` or None
        The solution, or None if the matrix is singular.

    """
    n = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    echelon, pivots = row_echelon(augmented)
    if pivots != list(range(n)):
        return None
    return tuple(row[n] for row in echelon)


def affine_rank(points):
    """Return the dimension of the affine hull of a non-empty point set."""
    points = list(points)
    origin = points[0]
    return rank([[a - b for a, b in zip(point, origin)] for point in points[1:]]) if len(
        points
    ) > 1 else 0


def bareiss_determinant(matrix, divide, zero=0):
    """Compute a determinant by fraction-free (Bareiss) elimination.

    Parameters
    ----------
    matrix : list of list
        Square matrix over a commutative ring.
    divide : callable
        ``divide(a, b)`` returns the exact quotient ``a / b``; it must raise if
        the division is not exact.
    zero
        The zero of the ring, returned for singular matrices. (Default value = 0)

    Returns
    -------
    object
        The determinant, as a ring element.

    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("Determinant of an empty matrix.")
    sign = 1
    previous = None
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                entry = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = entry if previous is None else divide(entry, previous)
            m[i][k] = zero
        previous = m[k][k]
        logger.debug("Bareiss elimination step %d of %d.", k + 1, n - 1)
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def cofactor_determinant(matrix, zero=0):
    """Compute a determinant by Laplace expansion along rows.

    Minors are memoized by their column set, so the cost is governed by the
    number of column subsets rather than by ``n!``.

    Parameters
    ----------
    matrix : list of list
        Square matrix over a commutative ring.
    zero
        The zero of the ring. (Default value = 0)

    Returns
    -------
    object
        The determinant, as a ring element.

    """
    n = len(matrix)
    if n == 0:
        raise ValueError("Determinant of an empty matrix.")
    minors = {}

    def minor(columns):
        # Rows used are the last len(columns) rows of the matrix.
        if columns in minors:
            return minors[columns]
        row = n - len(columns)
        if len(columns) == 1:
            result = matrix[row][columns[0]]
        else:
            result = zero
            for position, col in enumerate(columns):
                entry = matrix[row][col]
                if not entry:
                    continue
                term = entry * minor(columns[:position] + columns[position + 1 :])
                result = result + term if position % 2 == 0 else result - term
        minors[columns] = result
        return result

    return minor(tuple(range(n)))
