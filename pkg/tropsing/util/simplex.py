# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exact linear feasibility by the phase-one simplex method.

All arithmetic is over :class:`fractions.Fraction`. Pivoting follows Bland's
rule (smallest entering index, ties in the ratio test broken by the smallest
basic index), so the method terminates without any anti-cycling tolerance.
"""
import logging
from fractions import Fraction

logger = logging.getLogger(__name__)


def _pivot(rows, cost, pivot_row, pivot_col):
    scale = rows[pivot_row][pivot_col]
    rows[pivot_row] = [entry / scale for entry in rows[pivot_row]]
    pivot = rows[pivot_row]
    for i, row in enumerate(rows):
        if i != pivot_row and row[pivot_col]:
            factor = row[pivot_col]
            rows[i] = [a - factor * b for a, b in zip(row, pivot)]
    if cost[pivot_col]:
        factor = cost[pivot_col]
        cost[:] = [a - factor * b for a, b in zip(cost, pivot)]


def phase_one(matrix, rhs):
    """Find a non-negative solution of ``matrix @ x = rhs``.

    Parameters
    ----------
    matrix : sequence of sequences
        The constraint matrix (m rows, n columns).
    rhs : sequence
        The right hand side (length m).

    Returns
    -------
    tuple of :class:`fractions.Fraction` or None
        A basic feasible solution, or None if the system is infeasible.

    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    rows = []
    for i, (row, value) in enumerate(zip(matrix, rhs)):
        row = [Fraction(a) for a in row]
        value = Fraction(value)
        if value < 0:
            row = [-a for a in row]
            value = -value
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [value])
    basis = [n + i for i in range(m)]
    # Reduced costs of the auxiliary objective (sum of artificials), with the
    # negated objective value in the last entry.
    cost = [-sum(row[j] for row in rows) for j in range(n)] + [Fraction(0)] * m
    cost.append(-sum(row[-1] for row in rows))

    iterations = 0
    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        candidates = [
            (row[-1] / row[entering], basis[i], i)
            for i, row in enumerate(rows)
            if row[entering] > 0
        ]
        if not candidates:
            raise RuntimeError("Phase-one objective is unbounded, which cannot happen.")
        _, _, leaving = min(candidates)
        _pivot(rows, cost, leaving, entering)
        basis[leaving] = entering
        iterations += 1
    logger.debug("Phase one finished after %d pivots (%d x %d).", iterations, m, n)

    if cost[-1] != 0:
        return None
    solution = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            solution[var] = rows[i][-1]
    return tuple(solution)


def hull_contains(target, points, directions=()):
    """Test whether ``target`` lies in ``conv(points) + span(directions)``.

    Parameters
    ----------
    target : sequence
        The query point.
    points : sequence of sequences
        Generators of the convex part. May be empty, in which case the
        answer is False.
    directions : sequence of sequences
        Generators of the linear part. (Default value = ())

    Returns
    -------
    bool
        Whether the target is a convex combination of ``points`` up to a
        linear combination of ``directions``.

    """
    points = list(points)
    directions = list(directions)
    if not points:
        return False
    dim = len(target)
    columns = points + directions + [[-a for a in d] for d in directions]
    matrix = [[column[r] for column in columns] for r in range(dim)]
    matrix.append([1] * len(points) + [0] * (2 * len(directions)))
    return phase_one(matrix, list(target) + [1]) is not None
