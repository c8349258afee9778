# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""The fan H_{p,n} of degree-n tropical polynomials with a double root at 0.

A univariate polynomial lies in H_{p,n} iff for every residue ``r`` mod ``p``
the minimum of the coefficients of the monomials ``m != r (mod p)`` is
attained at least twice (for ``p = 0``: the minimum is attained at least
three times). The maximal cones are labelled by :class:`ConeDescriptor`.

This module also probes the maximal cells of the discriminant around a
codimension-one cell, see :func:`adjacency_probe`.
"""
import enum
import itertools
import logging
from fractions import Fraction
from math import comb

import jsonschema
from sympy import isprime

from .errors import (
    CellCollisionError,
    DimensionMismatchError,
    InvalidDescriptorError,
    ParseError,
    ProbeError,
)
from .singular import is_singular_at, singular_points_univariate
from .trop_core import (
    TropicalPolynomial,
    ValuationRegime,
    argmin_support,
    shift,
    term_values,
    univariate_roots,
)
from .util.config import require_config_value
from .util.linalg import nullspace, rank
from .util.misc import _format_rational

logger = logging.getLogger(__name__)

NOT_IN_H = "not in H"
NON_MAXIMAL = "non-maximal cell"

_DESCRIPTOR_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["type"],
    "properties": {
        "type": {"enum": ["I", "II", "III", "char0", "char2"]},
        "monomials": {
            "type": "array",
            "items": {"type": "integer"},
            "minItems": 3,
            "maxItems": 3,
        },
        "pairs": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}


class ConeType(enum.Enum):
    """The combinatorial types of maximal cones of H_{p,n}."""

    type_i = "I"
    """Three monomials with pairwise different residues tie at the minimum."""

    type_ii = "II"
    """A same-residue pair at the minimum, then a mixed-residue pair."""

    type_iii = "III"
    """Two same-residue pairs of different residues."""

    char0 = "char0"
    """Characteristic zero: any three monomials tie at the minimum."""

    char2 = "char2"
    """Characteristic two: an even pair and an odd pair."""


_TYPE_ORDER = {kind: position for position, kind in enumerate(ConeType)}
_TRIPLE_TYPES = (ConeType.type_i, ConeType.char0)


def _residue(m, p):
    return m % p if p else m


class ConeDescriptor:
    """The label of a maximal cone of H_{p,n}.

    Parameters
    ----------
    kind : :class:`ConeType` or str
        The cone type, or its JSON name ("I", "II", "III", "char0", "char2").
    data : sequence
        Three monomials for type I and char0 cones, two pairs of monomials
        otherwise. The pairs of a type II cone are ordered (the minimal pair
        first); for type III cones the pair holding the smallest monomial comes
        first and for char2 cones the even pair comes first.

    """

    def __init__(self, kind, data):
        self._kind = ConeType(kind)
        if self._kind in _TRIPLE_TYPES:
            data = tuple(sorted(int(m) for m in data))
            if len(data) != 3:
                raise InvalidDescriptorError(f"A {self._kind.value} cone needs three monomials.")
        else:
            pairs = [tuple(sorted(int(m) for m in pair)) for pair in data]
            if len(pairs) != 2 or any(len(pair) != 2 for pair in pairs):
                raise InvalidDescriptorError(
                    f"A {self._kind.value} cone needs two pairs of monomials."
                )
            if self._kind == ConeType.type_iii:
                pairs.sort()
            elif self._kind == ConeType.char2:
                pairs.sort(key=lambda pair: (pair[0] % 2, pair))
            data = tuple(pairs)
        self._data = data

    @property
    def kind(self):
        """:class:`ConeType`: The cone type."""
        return self._kind

    @property
    def monomials(self):
        """tuple: All monomials of the descriptor."""
        if self._kind in _TRIPLE_TYPES:
            return self._data
        return self._data[0] + self._data[1]

    @property
    def pairs(self):
        """tuple: The two pairs (None for triple types)."""
        return None if self._kind in _TRIPLE_TYPES else self._data

    def validate(self, n, p):
        """Check the residue conditions of the descriptor for degree ``n`` and ``p``.

        Raises
        ------
        :class:`~.InvalidDescriptorError`
            If a monomial is out of range, repeated, or the residues do not
            match the cone type.

        """
        monomials = self.monomials
        if len(set(monomials)) != len(monomials):
            raise InvalidDescriptorError(f"Repeated monomial in {self}.")
        if any(not 0 <= m <= n for m in monomials):
            raise InvalidDescriptorError(f"Monomial of {self} outside 0..{n}.")
        kind = self._kind
        if kind == ConeType.char0:
            return
        if p == 0:
            raise InvalidDescriptorError(f"{self} is not a characteristic zero cone.")
        if kind == ConeType.type_i:
            if len({m % p for m in monomials}) != 3:
                raise InvalidDescriptorError(f"The residues of {self} mod {p} are not distinct.")
            return
        (i, j), (k, l) = self._data
        if i % p != j % p:
            raise InvalidDescriptorError(f"{i} and {j} have different residues mod {p}.")
        if kind == ConeType.type_ii:
            if len({i % p, k % p, l % p}) != 3:
                raise InvalidDescriptorError(
                    f"The residues of {k}, {l} and {i} mod {p} are not distinct in {self}."
                )
            return
        if k % p != l % p or k % p == i % p:
            raise InvalidDescriptorError(f"The pairs of {self} do not lie in two classes mod {p}.")
        if kind == ConeType.char2 and (p != 2 or i % 2 != 0):
            raise InvalidDescriptorError(f"{self} needs p=2 and an even first pair.")

    def equalities(self):
        """Return the pairs of monomials with equal coefficients on the cone."""
        if self._kind in _TRIPLE_TYPES:
            i, j, k = self._data
            return [(i, j), (j, k)]
        return list(self._data)

    def inequalities(self, monomials, p):
        """Return pairs ``(low, high)`` with ``a_low <= a_high`` on the closure of the cone."""
        result = []
        if self._kind in _TRIPLE_TYPES:
            i = self._data[0]
            return [(i, m) for m in monomials if m not in self._data]
        (i, j), (k, l) = self._data
        for m in monomials:
            if m in (i, j, k, l):
                if self._kind == ConeType.type_ii and m in (k, l):
                    result.append((i, m))
                continue
            if self._kind == ConeType.type_ii:
                result.append((i, m))
                if m % p != i % p:
                    result.append((k, m))
            else:
                if _residue(m, p) != _residue(k, p):
                    result.append((i, m))
                if _residue(m, p) != _residue(i, p):
                    result.append((k, m))
        return result

    def to_json(self):
        """Return the descriptor JSON document."""
        if self._kind in _TRIPLE_TYPES:
            return {"type": self._kind.value, "monomials": list(self._data)}
        return {"type": self._kind.value, "pairs": [list(pair) for pair in self._data]}

    @classmethod
    def from_json(cls, doc):
        """Parse a descriptor JSON document.

        Raises
        ------
        :class:`~.ParseError`
            If the document is malformed.

        """
        try:
            jsonschema.validate(doc, _DESCRIPTOR_SCHEMA)
            kind = ConeType(doc["type"])
            key = "monomials" if kind in _TRIPLE_TYPES else "pairs"
            return cls(kind, doc[key])
        except jsonschema.ValidationError as error:
            raise ParseError(f"Invalid cone descriptor: {error.message}") from error
        except (KeyError, InvalidDescriptorError) as error:
            raise ParseError(f"Invalid cone descriptor {doc}: {error}") from error

    def _sort_key(self):
        return (_TYPE_ORDER[self._kind], self._data)

    def __lt__(self, other):
        return self._sort_key() < other._sort_key()

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self._kind, self._data) == (other._kind, other._data)

    def __hash__(self):
        return hash((self._kind, self._data))

    def __str__(self):
        def braces(items):
            return "{" + ",".join(map(str, items)) + "}"

        if self._kind in _TRIPLE_TYPES:
            return self._kind.value + braces(self._data)
        first, second = (braces(pair) for pair in self._data)
        if self._kind == ConeType.type_ii:
            return f"II[{first},{second}]"
        return f"{self._kind.value}{{{first},{second}}}"

    def __repr__(self):
        return f"ConeDescriptor({self._kind.value!r}, {list(self._data)!r})"


def _check_p(p):
    if p != 0 and not isprime(p):
        raise ValueError(f"p must be 0 or a prime, got {p}.")


def _coefficients(f):
    if f.dim != 1:
        raise DimensionMismatchError(f"Expected a univariate polynomial, got dim={f.dim}.")
    return {exp[0]: coeff for exp, coeff in f.items()}


def _argmin(values, keep=lambda m: True):
    candidates = {m: a for m, a in values.items() if keep(m)}
    if not candidates:
        return frozenset()
    minimum = min(candidates.values())
    return frozenset(m for m, a in candidates.items() if a == minimum)


def _deletion_argmins(values, p):
    """Return the argmin sets after deleting each residue class mod ``p``."""
    return [_argmin(values, lambda m, r=r: m % p != r) for r in range(p)]


def in_H(f, p):
    """Return whether ``f`` has a double root at 0 in characteristic ``p``.

    Parameters
    ----------
    f : :class:`~.TropicalPolynomial`
        A univariate polynomial.
    p : int
        Zero or a prime.

    Returns
    -------
    bool
        For ``p = 0``: the minimal coefficient is attained at least three
        times. Otherwise: for every residue class, the minimum over the
        monomials outside that class is attained at least twice.

    """
    values = _coefficients(f)
    if p == 0:
        return len(_argmin(values)) >= 3
    return all(len(argmin) >= 2 for argmin in _deletion_argmins(values, p))


def in_H_via_derivatives(f, p):
    """Decide membership in H_{p,n} with the Euler derivative singularity test."""
    regime = ValuationRegime.char_zero() if p == 0 else ValuationRegime.char_p(p)
    return is_singular_at(f, [0], regime).is_singular


def enumerate_cones(n, p):
    """Return all maximal cone descriptors of H_{p,n} in canonical order.

    Parameters
    ----------
    n : int
        The degree (monomials 0..n).
    p : int
        Zero or a prime.

    Returns
    -------
    list of :class:`ConeDescriptor`

    """
    _check_p(p)
    if n < 2:
        raise ValueError(f"The degree must be at least 2, got {n}.")
    monomials = range(n + 1)
    if p == 0:
        return [ConeDescriptor(ConeType.char0, t) for t in itertools.combinations(monomials, 3)]
    same = [pair for pair in itertools.combinations(monomials, 2) if (pair[1] - pair[0]) % p == 0]
    if p == 2:
        return sorted(
            ConeDescriptor(ConeType.char2, (even, odd))
            for even in same
            if even[0] % 2 == 0
            for odd in same
            if odd[0] % 2 == 1
        )
    cones = [
        ConeDescriptor(ConeType.type_i, t)
        for t in itertools.combinations(monomials, 3)
        if len({m % p for m in t}) == 3
    ]
    for first in same:
        r = first[0] % p
        for k, l in itertools.combinations(monomials, 2):
            if len({r, k % p, l % p}) == 3:
                cones.append(ConeDescriptor(ConeType.type_ii, (first, (k, l))))
    for first, second in itertools.combinations(same, 2):
        if first[0] % p != second[0] % p:
            cones.append(ConeDescriptor(ConeType.type_iii, (first, second)))
    cones.sort()
    logger.debug("H_{%d,%d} has %d maximal cones.", p, n, len(cones))
    return cones


def count_cones(descriptors, p):
    """Count descriptors per type, keyed by the JSON type names."""
    if p == 0:
        keys = ["char0"]
    elif p == 2:
        keys = ["char2"]
    else:
        keys = ["I", "II", "III"]
    counts = dict.fromkeys(keys, 0)
    for descriptor in descriptors:
        counts[descriptor.kind.value] += 1
    return counts


def count_cones_closed_form(n, p, degree=None):
    """Return the closed-form cone counts.

    Parameters
    ----------
    n : int
        For ``p = 0`` the degree; otherwise the number of monomials per
        residue class, i.e. the degree is ``p*n - 1``.
    p : int
        Zero or a prime.
    degree : int
        Optional degree; if given it must equal ``p*n - 1``. (Default value = None)

    Returns
    -------
    dict
        Counts keyed like :func:`count_cones`.

    Raises
    ------
    ValueError
        If the degree is below 2 or ``degree`` does not match ``p*n - 1``.

    """
    _check_p(p)
    implied = n if p == 0 else p * n - 1
    if implied < 2:
        raise ValueError(f"The degree must be at least 2, got {implied} for n={n}, p={p}.")
    if degree is not None and degree != implied:
        raise ValueError(f"Closed forms need degree {implied}, got {degree}.")
    if p == 0:
        return {"char0": comb(n + 1, 3)}
    if p == 2:
        return {"char2": comb(n, 2) ** 2}
    return {
        "I": comb(p, 3) * n**3,
        "II": p * n**2 * comb(n, 2) * comb(p - 1, 2),
        "III": comb(p, 2) * comb(n, 2) ** 2,
    }


def _levels(n, levels, default):
    coefficients = [default] * (n + 1)
    for value, monomials in levels:
        for m in monomials:
            coefficients[m] = value
    return TropicalPolynomial.from_coefficients(coefficients)


def cone_representative(c, n, p):
    """Return a polynomial in the relative interior of a maximal cone.

    Raises
    ------
    :class:`~.InvalidDescriptorError`
        If the descriptor is invalid for ``n`` and ``p``.

    """
    c.validate(n, p)
    if c.kind in _TRIPLE_TYPES:
        return _levels(n, [(0, c.monomials)], 1)
    (i, j), (k, l) = c.pairs
    if c.kind == ConeType.char2:
        return _levels(n, [(0, (i, j, k, l))], 1)
    if c.kind == ConeType.type_ii:
        same_class = [m for m in range(n + 1) if m % p == i % p]
        return _levels(n, [(3, same_class), (0, (i, j)), (1, (k, l))], 2)
    return _levels(n, [(0, (i, j)), (1, (k, l))], 2)


def separated_representative(c, n, p, gap):
    """Return a cone representative whose levels are ``gap`` apart.

    Type I (and char0) cones get 0 on the triple and ``gap`` elsewhere. Type II
    cones get 0 on the minimal pair, ``gap`` on the second pair, ``3*gap`` on
    the remaining monomials of the minimal pair's class and ``2*gap`` elsewhere.
    Type III cones get 0, ``gap`` and ``2*gap``.
    """
    c.validate(n, p)
    gap = Fraction(gap)
    if c.kind in _TRIPLE_TYPES:
        return _levels(n, [(0, c.monomials)], gap)
    (i, j), (k, l) = c.pairs
    levels = [(0, (i, j)), (gap, (k, l))]
    if c.kind == ConeType.type_ii:
        levels.insert(0, (3 * gap, [m for m in range(n + 1) if m % p == i % p]))
    return _levels(n, levels, 2 * gap)


def _satisfies(values, c, p, strict):
    monomials = set(values)
    if not set(c.monomials) <= monomials:
        return False
    if any(values[a] != values[b] for a, b in c.equalities()):
        return False
    for low, high in c.inequalities(sorted(monomials), p):
        if values[low] > values[high] or (strict and values[low] == values[high]):
            return False
    return True


def in_interior(f, c, p):
    """Return whether ``f`` lies in the relative interior of the cone ``c``."""
    return _satisfies(_coefficients(f), c, p, strict=True)


def in_closure(f, c, p):
    """Return whether ``f`` lies in the closure of the cone ``c``."""
    return _satisfies(_coefficients(f), c, p, strict=False)


def equality_rank(c, n):
    """Return the rank of the equality system of the cone (its codimension)."""
    rows = []
    for a, b in c.equalities():
        row = [0] * (n + 1)
        row[a], row[b] = 1, -1
        rows.append(row)
    return rank(rows)


def _candidates(values, p):
    minimal = _argmin(values)
    if p == 0:
        if len(minimal) == 3:
            yield ConeDescriptor(ConeType.char0, minimal)
        return
    deletions = _deletion_argmins(values, p)
    if p == 2:
        even, odd = deletions[1], deletions[0]
        if len(even) == 2 and len(odd) == 2:
            yield ConeDescriptor(ConeType.char2, (even, odd))
        return
    if len(minimal) == 3:
        yield ConeDescriptor(ConeType.type_i, minimal)
    for first in itertools.combinations(sorted(minimal), 2):
        for second in deletions:
            if len(second) == 2:
                yield ConeDescriptor(ConeType.type_ii, (first, second))
                yield ConeDescriptor(ConeType.type_iii, (first, second))


def classify(f, n, p):
    """Return the maximal cone of H_{p,n} whose interior contains ``f``.

    Returns
    -------
    :class:`ConeDescriptor` or str
        The descriptor, :data:`NON_MAXIMAL` if ``f`` lies in H_{p,n} but in no
        maximal cone interior, or :data:`NOT_IN_H`.

    Raises
    ------
    :class:`~.CellCollisionError`
        If ``f`` lies in the interior of two different maximal cones.

    """
    _check_p(p)
    if not in_H(f, p):
        return NOT_IN_H
    values = _coefficients(f)
    survivors = set()
    for candidate in _candidates(values, p):
        try:
            candidate.validate(n, p)
        except InvalidDescriptorError:
            continue
        if _satisfies(values, candidate, p, strict=True):
            survivors.add(candidate)
    if len(survivors) > 1:
        raise CellCollisionError(
            f"{f} lies in the interior of {len(survivors)} maximal cones: "
            + ", ".join(str(c) for c in sorted(survivors))
        )
    if not survivors:
        return NON_MAXIMAL
    return survivors.pop()


def shared_with_char_zero(n, p):
    """Return the maximal cones that H_{p,n} shares with H_{0,n}: the type I cones."""
    return [c for c in enumerate_cones(n, p) if c.kind == ConeType.type_i]


def halving_split(f):
    """Split ``f`` into its even and odd halves.

    Returns
    -------
    tuple of :class:`~.TropicalPolynomial`
        ``(g_even, g_odd)`` with ``g_even = ⊕ a_{2i} x^i`` and
        ``g_odd = ⊕ a_{2i+1} x^i``.

    """
    values = _coefficients(f)
    even = TropicalPolynomial(1, {(m // 2,): a for m, a in values.items() if m % 2 == 0})
    odd = TropicalPolynomial(1, {(m // 2,): a for m, a in values.items() if m % 2 == 1})
    return even, odd


def two_root_cell(n, p, first, second, gap=Fraction(1, 8)):
    """Return a polynomial with double roots in the cones ``first`` (at 0) and ``second`` (at -1).

    The coefficients lie on a convex piecewise linear function with slope 0 up
    to the largest monomial of ``first``, slope 1/2 up to the smallest monomial
    of ``second`` and slope 1 afterwards. The monomials up to the first block
    are lifted by the levels of :func:`separated_representative` for ``first``,
    those from the second block on by the levels for ``second``; monomials in
    between lie one unit above the function.

    Parameters
    ----------
    n : int
        The degree.
    p : int
        The prime of both descriptors.
    first, second : :class:`ConeDescriptor`
        The maximal cones seen from 0 and from -1.
    gap : rational
        Level spacing of both blocks, in ``(0, 1/6)``. (Default value = 1/8)

    Raises
    ------
    :class:`~.InvalidDescriptorError`
        If a descriptor is invalid for ``n`` and ``p``.
    ValueError
        If the blocks interleave or ``gap`` is out of range.

    """
    first.validate(n, p)
    second.validate(n, p)
    gap = Fraction(gap)
    # The highest block level, 3*gap, must stay below the hull margin of 1/2.
    if not 0 < gap < Fraction(1, 6):
        raise ValueError(f"The level spacing must lie in (0, 1/6), got {gap}.")
    k, start = max(first.monomials), min(second.monomials)
    if k >= start:
        raise ValueError(f"The monomials of {first} must lie below those of {second}.")
    low = separated_representative(first, n, p, gap)
    high = separated_representative(second, n, p, gap)

    def hull(m):
        if m <= k:
            return Fraction(0)
        if m <= start:
            return Fraction(m - k, 2)
        return Fraction(start - k, 2) + (m - start)

    coefficients = []
    for m in range(n + 1):
        if m <= k:
            coefficients.append(low[m])
        elif m >= start:
            coefficients.append(hull(m) + high[m])
        else:
            coefficients.append(hull(m) + 1)
    return TropicalPolynomial.from_coefficients(coefficients)


def common_root_cell(n, level0, level1=()):
    """Return the polynomial with 0 on ``level0``, 1 on ``level1`` and 2 elsewhere."""
    if set(level0) & set(level1):
        raise ValueError("The levels must be disjoint.")
    return _levels(n, [(0, level0), (1, level1)], 2)


def _root_pattern(g, b, p):
    values = {m[0]: a for m, a in term_values(g, [b]).items()}
    return (
        tuple(sorted(_argmin(values))),
        tuple(tuple(sorted(w)) for w in _deletion_argmins(values, p)),
    )


def _signature(g, n, p):
    regime = ValuationRegime.char_p(p)
    descriptors = []
    for report in singular_points_univariate(g, regime):
        if report.is_singular:
            descriptors.append(str(classify(shift(g, report.point), n, p)))
    pattern = tuple(_root_pattern(g, b, p) for b, _ in univariate_roots(g))
    return (tuple(sorted(descriptors)), pattern)


def _tie_rows(values, p, root_column, width):
    rows = []
    sets = [_argmin(values)] + _deletion_argmins(values, p)
    for tie in sets:
        tie = sorted(tie)
        for a, b in zip(tie, tie[1:]):
            row = [0] * width
            row[a], row[b] = 1, -1
            row[root_column] = a - b
            rows.append(row)
    return rows


def _slack(f):
    gaps = []
    for b, _ in univariate_roots(f):
        values = sorted(set(term_values(f, [b]).values()))
        gaps.extend(y - x for x, y in zip(values, values[1:]))
    return min(gaps, default=Fraction(1))


class AdjacencyResult:
    """The maximal cells of the discriminant found around a codimension-one cell.

    Attributes
    ----------
    roots : list of :class:`fractions.Fraction`
        The singular roots of the probed polynomial.
    signatures : list of tuple
        The distinct signatures ``(descriptors, pattern)`` in sorted order.
    sources : dict
        Maps each signature to the ways it was found.

    """

    def __init__(self, roots, sources):
        self.roots = roots
        self.sources = sources
        self.signatures = sorted(sources)

    @property
    def count(self):
        """int: The number of adjacent maximal cells."""
        return len(self.signatures)

    def to_json(self):
        """Return the result as a JSON-compatible dict."""
        return {
            "roots": [_format_rational(r) for r in self.roots],
            "count": self.count,
            "cells": [
                {
                    "descriptors": list(descriptors),
                    "pattern": [
                        {"argmin": list(argmin), "deletions": [list(w) for w in deletions]}
                        for argmin, deletions in pattern
                    ],
                    "found_by": self.sources[(descriptors, pattern)],
                }
                for descriptors, pattern in self.signatures
            ],
        }

    def __repr__(self):
        return f"AdjacencyResult(roots={[str(r) for r in self.roots]}, count={self.count})"


def _circle_points(samples):
    """Rational points on the unit circle, including the four axis directions."""
    if not samples:
        return []
    steps = {Fraction(4 * j, samples) - 2 for j in range(samples)}
    steps.update((Fraction(0), Fraction(1), Fraction(-1)))
    points = [((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) for t in sorted(steps)]
    points.append((Fraction(-1), Fraction(0)))
    return points


def adjacency_probe(f, p, samples=None):
    """Find the maximal cells of the discriminant adjacent to the cell of ``f``.

    The polynomial must be singular in characteristic ``p`` with one or two
    singular roots, and lie on a cell of codimension one in the discriminant.
    A two-dimensional complement of that cell is computed exactly from the
    active tie equalities. For every maximal cone of H_{p,n} containing ``f``
    (seen from a singular root) in its closure, the cone equalities cut a line
    out of the complement; every side of that line that enters the cone's
    interior yields an adjacent cell. ``samples`` further rational directions
    on the unit circle of the complement are tested as well.

    Parameters
    ----------
    f : :class:`~.TropicalPolynomial`
        A univariate polynomial of degree ``n`` with full support.
    p : int
        An odd prime.
    samples : int
        Number of sampled circle directions. (Default value = None, which
        uses the ``probe_samples`` configuration value)

    Returns
    -------
    :class:`AdjacencyResult`

    Raises
    ------
    :class:`~.ProbeError`
        If ``f`` is not singular, has more than two singular roots, or does
        not lie on a codimension-one cell.

    """
    if samples is None:
        samples = require_config_value("probe_samples")
    values = _coefficients(f)
    n = max(values)
    if sorted(values) != list(range(n + 1)):
        raise ProbeError("The probed polynomial must have full support 0..n.")
    regime = ValuationRegime.char_p(p)
    roots = [r.point[0] for r in singular_points_univariate(f, regime) if r.is_singular]
    if not roots:
        raise ProbeError(f"{f} is not singular in characteristic {p}.")
    if len(roots) > 2:
        raise ProbeError(f"{f} has {len(roots)} singular roots, expected at most 2.")

    width = n + 1 + len(roots)
    rows = []
    for s, root in enumerate(roots):
        seen = {m[0]: a for m, a in term_values(f, [root]).items()}
        rows.extend(_tie_rows(seen, p, n + 1 + s, width))
    tangent = [vector[: n + 1] for vector in nullspace(rows, width)]
    complement = nullspace(tangent, n + 1) if tangent else nullspace([], n + 1)
    if len(complement) != 2:
        raise ProbeError(
            f"{f} lies on a cell of codimension {len(complement)}, expected 2 in "
            "coefficient space."
        )
    u1, u2 = complement
    slack = _slack(f)
    logger.debug("Probing %s: roots %s, slack %s.", f, roots, slack)

    def perturb(s, t, scale):
        return TropicalPolynomial.from_coefficients(
            [values[m] + scale * (s * u1[m] + t * u2[m]) for m in range(n + 1)]
        )

    sources = {}
    cones = enumerate_cones(n, p)
    for root in roots:
        seen = shift(f, [root])
        for cone in cones:
            if not in_closure(seen, cone, p):
                continue
            system = [
                [u1[a] - u1[b], u2[a] - u2[b], a - b] for a, b in cone.equalities()
            ]
            line = nullspace(system, 3)
            if len(line) != 1:
                logger.debug("Cone %s meets the complement in dimension %d.", cone, len(line))
                continue
            for sign in (1, -1):
                s, t, delta = (sign * x for x in line[0])
                if s == 0 and t == 0:
                    continue
                norm = max(abs(s * u1[m] + t * u2[m]) for m in range(n + 1))
                epsilon = slack / (4 * (norm + n * abs(delta) + 1))
                g = perturb(s, t, epsilon)
                if not in_interior(shift(g, [root + epsilon * delta]), cone, p):
                    continue
                signature = _signature(g, n, p)
                sources.setdefault(signature, []).append(
                    f"root {_format_rational(root)}, cone {cone}, side {sign:+d}"
                )

    for s, t in _circle_points(samples):
        norm = max(abs(s * u1[m] + t * u2[m]) for m in range(n + 1))
        g = perturb(s, t, slack / (4 * (norm + 1)))
        if any(r.is_singular for r in singular_points_univariate(g, regime)):
            signature = _signature(g, n, p)
            sources.setdefault(signature, []).append(
                f"circle direction ({_format_rational(s)}, {_format_rational(t)})"
            )
    result = AdjacencyResult(roots, sources)
    logger.info("Found %d maximal cells adjacent to %s.", result.count, f)
    return result
