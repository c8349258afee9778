# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Tropical (min-plus) Laurent polynomials, valuation regimes and tropical roots.

A tropical polynomial ``f = ⊕ a_i x^i`` is stored support-explicitly as a map
from integer exponent vectors to exact rational coefficients. As a function,
``f(b) = min_i (a_i + <i, b>)``, and ``b`` is a tropical root of ``f`` if the
minimum is attained at least twice.

All arithmetic is exact (:class:`fractions.Fraction`).
"""
import enum
import json
import logging
from collections.abc import Mapping
from fractions import Fraction

import jsonschema
from sympy import isprime

from .errors import DimensionMismatchError, EmptyPolynomialError, ParseError
from .util.misc import _format_rational

logger = logging.getLogger(__name__)

_POLYNOMIAL_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["dim", "terms"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "coeff"],
                "properties": {
                    "exp": {"type": "array", "items": {"type": "integer"}},
                    "coeff": {"type": ["string", "integer"]},
                },
            },
        },
    },
}


def variable_names(dim):
    """Return the printed variable names for ``dim`` variables.

    Up to three variables are called x, y and z; beyond that x1, ..., xd.
    """
    if dim <= 3:
        return ["x", "y", "z"][:dim]
    return [f"x{k}" for k in range(1, dim + 1)]


class RegimeKind(enum.IntEnum):
    """The three characteristic settings for integer valuations."""

    char_zero = 0
    """Characteristic zero: every nonzero integer has valuation 0."""

    char_p = 1
    """Characteristic p: integers divisible by p are zero."""

    padic = 2
    """Mixed characteristic: integers have their p-adic valuation."""


class ValuationRegime:
    """Selects how integers are valuated in Euler derivatives.

    Parameters
    ----------
    kind : :class:`RegimeKind`
        The regime kind.
    p : int
        The prime for :attr:`RegimeKind.char_p` and :attr:`RegimeKind.padic`.
        Must be None for :attr:`RegimeKind.char_zero`. (Default value = None)

    Raises
    ------
    ValueError
        If ``p`` is missing, superfluous or not prime.

    """

    def __init__(self, kind, p=None):
        kind = RegimeKind(kind)
        if kind == RegimeKind.char_zero:
            if p not in (None, 0):
                raise ValueError("A characteristic zero regime takes no prime.")
            p = None
        else:
            if p is None or not isprime(int(p)):
                raise ValueError(f"The regime prime must be a prime number, got {p}.")
            p = int(p)
        self._kind = kind
        self._p = p

    @classmethod
    def char_zero(cls):
        """Return the characteristic zero regime."""
        return cls(RegimeKind.char_zero)

    @classmethod
    def char_p(cls, p):
        """Return the characteristic ``p`` regime."""
        return cls(RegimeKind.char_p, p)

    @classmethod
    def padic(cls, p):
        """Return the ``p``-adic regime."""
        return cls(RegimeKind.padic, p)

    @classmethod
    def parse(cls, spec):
        """Parse a regime spec of the form ``char:0``, ``char:P`` or ``padic:P``.

        Raises
        ------
        :class:`~.ParseError`
            If the text is malformed or names a non-prime.

        """
        try:
            name, value = spec.strip().split(":")
            value = int(value)
            if name == "char":
                return cls.char_zero() if value == 0 else cls.char_p(value)
            if name == "padic":
                return cls.padic(value)
        except ValueError as error:
            raise ParseError(f"Invalid regime '{spec}': {error}") from error
        raise ParseError(f"Invalid regime '{spec}': expected char:0, char:P or padic:P.")

    @property
    def kind(self):
        """:class:`RegimeKind`: The regime kind."""
        return self._kind

    @property
    def p(self):
        """int: The prime, or None in characteristic zero."""
        return self._p

    def __str__(self):
        if self._kind == RegimeKind.char_zero:
            return "char:0"
        prefix = "char" if self._kind == RegimeKind.char_p else "padic"
        return f"{prefix}:{self._p}"

    def __repr__(self):
        return f"ValuationRegime.parse('{self}')"

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self._kind, self._p) == (other._kind, other._p)

    def __hash__(self):
        return hash((self._kind, self._p))


class Point(tuple):
    """A point of rational space, stored as a tuple of fractions.

    Scalars are accepted for univariate points, so ``Point(0)`` equals
    ``Point([0])``.
    """

    def __new__(cls, coords):
        if isinstance(coords, (int, Fraction, str)):
            coords = [coords]
        return super().__new__(cls, (Fraction(c) for c in coords))

    @property
    def dim(self):
        """int: The number of coordinates."""
        return len(self)

    def __repr__(self):
        return f"Point({[str(c) for c in self]})"


def _check_exponent(exp, dim):
    exp = tuple(int(e) for e in exp)
    if len(exp) != dim:
        raise DimensionMismatchError(
            f"Exponent {exp} has length {len(exp)}, expected {dim}."
        )
    return exp


class TropicalPolynomial(Mapping):
    """A min-plus polynomial with explicit support.

    The polynomial behaves like a read-only mapping from exponent vectors
    (tuples of integers) to coefficients (:class:`fractions.Fraction`).
    Iteration order is the sorted order of the exponents.

    Parameters
    ----------
    dim : int
        Number of variables.
    terms : mapping or iterable of pairs
        The terms as ``{exponent: coefficient}`` or ``[(exponent, coefficient)]``.
        For univariate polynomials, integer exponents are accepted.

    Raises
    ------
    :class:`~.DimensionMismatchError`
        If an exponent has the wrong length.
    ValueError
        If an exponent appears twice.

    """

    def __init__(self, dim, terms=()):
        if dim < 1:
            raise ValueError("A tropical polynomial needs at least one variable.")
        if isinstance(terms, Mapping):
            terms = terms.items()
        self._dim = int(dim)
        self._terms = {}
        for exp, coeff in terms:
            if isinstance(exp, int):
                exp = (exp,)
            exp = _check_exponent(exp, self._dim)
            if exp in self._terms:
                raise ValueError(f"Duplicate exponent {exp}.")
            self._terms[exp] = Fraction(coeff)
        self._terms = dict(sorted(self._terms.items()))

    @classmethod
    def from_coefficients(cls, coefficients):
        """Build a univariate polynomial from coefficients of x^0, x^1, ....

        Entries that are None are absent monomials.
        """
        return cls(1, [(i, a) for i, a in enumerate(coefficients) if a is not None])

    @property
    def dim(self):
        """int: The number of variables."""
        return self._dim

    @property
    def support(self):
        """tuple: The sorted exponent vectors."""
        return tuple(self._terms)

    def coefficient_list(self, degree):
        """Return univariate coefficients ``[a_0, ..., a_degree]`` with None for gaps."""
        return [self._terms.get((i,)) for i in range(degree + 1)]

    def __getitem__(self, exp):
        if isinstance(exp, int):
            exp = (exp,)
        return self._terms[exp]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TropicalPolynomial):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        return hash((self._dim, tuple(self._terms.items())))

    def __repr__(self):
        terms = ", ".join(f"{exp}: '{coeff}'" for exp, coeff in self._terms.items())
        return f"TropicalPolynomial({self._dim}, {{{terms}}})"

    def __str__(self):
        if not self._terms:
            return "∞"
        names = variable_names(self._dim)
        parts = []
        for exp, coeff in self._terms.items():
            monomial = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exp)
                if e != 0
            )
            parts.append(f"{coeff}{monomial}")
        return "⊕".join(parts)


def _check_point(f, b):
    b = Point(b)
    if b.dim != f.dim:
        raise DimensionMismatchError(
            f"Point {b!r} has {b.dim} coordinates, the polynomial has {f.dim} variables."
        )
    return b


def term_values(f, b):
    """Return ``{i: a_i + <i, b>}`` for all terms of ``f``."""
    b = _check_point(f, b)
    return {exp: coeff + sum(e * c for e, c in zip(exp, b)) for exp, coeff in f.items()}


def evaluate(f, b):
    """Evaluate a tropical polynomial at a point.

    Parameters
    ----------
    f : :class:`TropicalPolynomial`
        The polynomial.
    b : sequence or rational
        The point.

    Returns
    -------
    :class:`fractions.Fraction`
        ``min_i (a_i + <i, b>)``.

    Raises
    ------
    :class:`~.DimensionMismatchError`
        If the dimensions of ``f`` and ``b`` differ.
    :class:`~.EmptyPolynomialError`
        If ``f`` has no terms.

    """
    if not len(f):
        raise EmptyPolynomialError("Cannot evaluate a polynomial without terms.")
    return min(term_values(f, b).values())


def argmin_support(f, b):
    """Return the set of exponents attaining the minimum of ``f`` at ``b``."""
    if not len(f):
        raise EmptyPolynomialError("Cannot evaluate a polynomial without terms.")
    values = term_values(f, b)
    minimum = min(values.values())
    return frozenset(exp for exp, value in values.items() if value == minimum)


def is_tropical_root(f, b):
    """Return whether the minimum of ``f`` at ``b`` is attained at least twice.

    A single term has no tropical roots.

    Raises
    ------
    :class:`~.EmptyPolynomialError`
        If ``f`` has no terms.

    """
    if not len(f):
        raise EmptyPolynomialError("A polynomial without terms has no tropical roots to test.")
    if len(f) < 2:
        _check_point(f, b)
        return False
    return len(argmin_support(f, b)) >= 2


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def univariate_roots(f):
    """Return the tropical roots of a univariate polynomial.

    The roots are the negated slopes of the edges of the lower convex hull of
    ``{(i, a_i)}``.

    Parameters
    ----------
    f : :class:`TropicalPolynomial`
        A univariate polynomial.

    Returns
    -------
    list of tuple
        Pairs ``(root, argmin set)`` in strictly increasing order of the root.
        Polynomials with fewer than two terms have no roots.

    """
    if f.dim != 1:
        raise DimensionMismatchError(f"Expected a univariate polynomial, got dim={f.dim}.")
    if len(f) < 2:
        return []
    hull = []
    for exp, coeff in f.items():
        point = (exp[0], coeff)
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    roots = []
    for (i, a), (j, c) in zip(hull, hull[1:]):
        root = -Fraction(c - a, j - i)
        roots.append((root, argmin_support(f, [root])))
    roots.reverse()
    logger.debug("Lower hull of %s has %d edges.", f, len(roots))
    return roots


def common_roots(f, g):
    """Return the sorted tropical roots shared by two univariate polynomials."""
    return [root for root, _ in univariate_roots(f) if is_tropical_root(g, [root])]


def normalize(f):
    """Subtract the minimum coefficient from every coefficient."""
    if not len(f):
        raise EmptyPolynomialError("Cannot normalize a polynomial without terms.")
    minimum = min(f.values())
    return TropicalPolynomial(f.dim, {exp: coeff - minimum for exp, coeff in f.items()})


def shift(f, c):
    """Return ``f`` seen from the point ``c``: ``a_i -> a_i + <i, c>``.

    The argmin of the result at ``b`` equals the argmin of ``f`` at ``b + c``.
    """
    return TropicalPolynomial(f.dim, term_values(f, c))


def scale(f, factor):
    """Multiply every coefficient by a rational factor."""
    factor = Fraction(factor)
    return TropicalPolynomial(f.dim, {exp: coeff * factor for exp, coeff in f.items()})


def polynomial_from_json(doc):
    """Parse a polynomial from its JSON document (a dict or a JSON string).

    Raises
    ------
    :class:`~.ParseError`
        If the document does not match the polynomial schema, has duplicate
        exponents, wrong exponent lengths, or malformed coefficients.

    """
    try:
        if isinstance(doc, str):
            doc = json.loads(doc)
        jsonschema.validate(doc, _POLYNOMIAL_SCHEMA)
        terms = []
        for term in doc["terms"]:
            coeff = term["coeff"]
            coeff = Fraction(coeff.replace("−", "-")) if isinstance(coeff, str) else coeff
            terms.append((tuple(term["exp"]), coeff))
        return TropicalPolynomial(doc["dim"], terms)
    except jsonschema.ValidationError as error:
        raise ParseError(f"Invalid polynomial: {error.message}") from error
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError(f"Invalid polynomial: {error}") from error


def polynomial_to_json(f):
    """Return the JSON document of a polynomial (a plain dict)."""
    return {
        "dim": f.dim,
        "terms": [
            {"exp": list(exp), "coeff": _format_rational(coeff)} for exp, coeff in f.items()
        ],
    }


def load_polynomial(path):
    """Read a polynomial JSON file."""
    try:
        with open(path) as file:
            return polynomial_from_json(json.load(file))
    except json.JSONDecodeError as error:
        raise ParseError(f"Invalid polynomial file '{path}': {error}") from error
