# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Euler derivatives of tropical polynomials.

For an integer affine form ``L = b0 + b1*x1 + ... + bd*xd`` the Euler
derivative of ``f = ⊕ a_i x^i`` is ``⊕ (v(L(i)) + a_i) x^i`` over the
monomials with ``L(i) != 0`` in the ground field; the valuation regime decides
both which integers vanish and what ``v`` is.

A singular point is a common tropical root of all Euler derivatives, and
:func:`derivative_family` returns a finite list of forms that suffices for
that test.
"""
import itertools
import logging
import math
import re
from fractions import Fraction
from functools import reduce

from sympy import multiplicity

from .errors import DimensionMismatchError, ParseError, UnsupportedRegimeError
from .trop_core import RegimeKind, TropicalPolynomial, variable_names
from .util.linalg import affine_rank, nullspace

logger = logging.getLogger(__name__)

INFINITY = math.inf
"""The valuation of integers that vanish in the regime."""


def int_valuation(m, regime):
    """Return the valuation of the integer ``m`` under a regime.

    Parameters
    ----------
    m : int
        The integer.
    regime : :class:`~.ValuationRegime`
        The valuation regime.

    Returns
    -------
    int or float
        A non-negative integer, or :data:`INFINITY` if ``m`` vanishes.

    """
    if m == 0:
        return INFINITY
    if regime.kind == RegimeKind.char_zero:
        return 0
    if regime.kind == RegimeKind.char_p:
        return INFINITY if m % regime.p == 0 else 0
    return int(multiplicity(regime.p, abs(m)))


class LinearForm:
    """A primitive integer affine form ``b0 + b1*x1 + ... + bd*xd``.

    Parameters
    ----------
    b0 : int
        The constant term.
    b : sequence of int
        The variable coefficients; its length is the dimension.
    label : str
        Optional annotation used in reports. (Default value = None, which
        uses the printed form)

    Raises
    ------
    ValueError
        If the coefficients are not coprime (this includes the zero form).

    """

    def __init__(self, b0, b, label=None):
        self._b0 = int(b0)
        self._b = tuple(int(c) for c in b)
        if not self._b:
            raise ValueError("A linear form needs at least one variable.")
        if reduce(math.gcd, self._b, abs(self._b0)) != 1:
            raise ValueError(
                f"Linear form coefficients {(self._b0,) + self._b} are not coprime."
            )
        self.label = label or str(self)

    @classmethod
    def constant(cls, dim):
        """Return the trivial form ``1`` in ``dim`` variables."""
        return cls(1, (0,) * dim)

    @classmethod
    def parse(cls, text, dim=1):
        """Parse a form such as ``"x-4"``, ``"x-y"`` or ``"1 + 2*x1 - x3"``.

        Variables are named x, y, z (for up to three variables) or x1 ... xd.
        The unicode minus sign is accepted.

        Raises
        ------
        :class:`~.ParseError`
            If the text is malformed or the form is not primitive.

        """
        names = {name: k for k, name in enumerate(variable_names(dim))}
        names.update({f"x{k + 1}": k for k in range(dim)})
        compact = text.replace("−", "-").replace(" ", "")
        if not compact or not re.fullmatch(r"[-+]?[^-+]+([-+][^-+]+)*", compact):
            raise ParseError(f"Invalid linear form '{text}'.")
        b0 = 0
        b = [0] * dim
        for sign, body in re.findall(r"([-+]?)([^-+]+)", compact):
            factor = -1 if sign == "-" else 1
            match = re.fullmatch(r"(\d*)\*?([a-z]\w*)", body)
            if match:
                coeff, name = match.groups()
                if name not in names:
                    raise ParseError(f"Unknown variable '{name}' in linear form '{text}'.")
                b[names[name]] += factor * (int(coeff) if coeff else 1)
            elif body.isdigit():
                b0 += factor * int(body)
            else:
                raise ParseError(f"Invalid term '{body}' in linear form '{text}'.")
        try:
            return cls(b0, b)
        except ValueError as error:
            raise ParseError(f"Invalid linear form '{text}': {error}") from error

    @property
    def b0(self):
        """int: The constant term."""
        return self._b0

    @property
    def b(self):
        """tuple of int: The variable coefficients."""
        return self._b

    @property
    def dim(self):
        """int: The number of variables."""
        return len(self._b)

    def __call__(self, exp):
        """Evaluate the form at an exponent vector."""
        return self._b0 + sum(c * e for c, e in zip(self._b, exp))

    def __str__(self):
        parts = []
        for coeff, name in zip(self._b, variable_names(self.dim)):
            if coeff == 0:
                continue
            magnitude = name if abs(coeff) == 1 else f"{abs(coeff)}*{name}"
            sign = "-" if coeff < 0 else ("+" if parts else "")
            parts.append(sign + magnitude)
        if not parts:
            return str(self._b0)
        if self._b0:
            parts.append(f"{self._b0:+d}")
        return "".join(parts)

    def __repr__(self):
        return f"LinearForm({self._b0}, {self._b})"

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self._b0, self._b) == (other._b0, other._b)

    def __hash__(self):
        return hash((self._b0, self._b))


def euler_derivative(f, form, regime):
    """Return the Euler derivative of ``f`` with respect to ``form``.

    Terms whose lattice value ``form(i)`` vanishes in the regime are dropped,
    all others gain the valuation of ``form(i)``. The result may be empty.

    Raises
    ------
    :class:`~.DimensionMismatchError`
        If the form and the polynomial have different dimensions.

    """
    if form.dim != f.dim:
        raise DimensionMismatchError(
            f"Form {form} has {form.dim} variables, the polynomial has {f.dim}."
        )
    terms = {}
    for exp, coeff in f.items():
        valuation = int_valuation(form(exp), regime)
        if valuation != INFINITY:
            terms[exp] = coeff + valuation
    return TropicalPolynomial(f.dim, terms)


def _char_p_family(dim, p):
    forms = []
    for lead in range(dim):
        for rest in itertools.product(range(-(p - 1), 1), repeat=dim - lead):
            b = (0,) * lead + (1,) + rest[:-1]
            forms.append(LinearForm(rest[-1], b))
    forms.sort(key=lambda form: tuple(-c for c in form.b) + (-form.b0,))
    return [LinearForm.constant(dim)] + forms


def _flat_kill_sets(support, dim):
    kill_sets = {}
    for size in range(1, dim + 1):
        for subset in itertools.combinations(support, size):
            span_rank = affine_rank(subset)
            if span_rank != size - 1:
                continue
            killed = tuple(q for q in support if affine_rank(subset + (q,)) == span_rank)
            kill_sets.setdefault(killed, subset)
    return kill_sets


def _avoiding_form(subset, others, dim):
    """Find a primitive form vanishing on ``subset`` and nowhere on ``others``."""
    basis = nullspace([[1] + list(s) for s in subset], dim + 1)
    for norm in itertools.count(1):
        for weights in itertools.product(range(-norm, norm + 1), repeat=len(basis)):
            if max(abs(w) for w in weights) != norm:
                continue
            vector = [sum(w * v[k] for w, v in zip(weights, basis)) for k in range(dim + 1)]
            if not any(vector[1:]):
                continue
            g = reduce(math.gcd, vector, 0)
            vector = [c // g for c in vector]
            if next(c for c in vector[1:] if c) < 0:
                vector = [-c for c in vector]
            form = LinearForm(vector[0], vector[1:])
            if all(form(q) != 0 for q in others):
                return form


def _char_zero_family(support, dim):
    forms = [LinearForm.constant(dim)]
    for killed, subset in sorted(_flat_kill_sets(support, dim).items()):
        others = [q for q in support if q not in killed]
        form = _avoiding_form(subset, others, dim)
        form.label = f"{form} (removes {', '.join(map(str, killed))})"
        forms.append(form)
    return forms


def _padic_family(support, p, spread):
    points = sorted(exp[0] for exp in support)
    valuations = [
        multiplicity(p, abs(i - j)) for i, j in itertools.combinations(points, 2)
    ]
    depth = max(valuations, default=0) + 1
    cutoff = math.ceil(Fraction(spread)) + depth + 1
    forms = [LinearForm.constant(1)]
    for c in range(p**depth):
        forms.append(LinearForm(-c, (1,), label=f"x-{c} (class {c} mod {p}^{depth})"))
    for i in points:
        for t in range(depth, cutoff + 1):
            forms.append(LinearForm(-(i + p**t), (1,), label=f"x-{i + p**t} (a_{i}+{t})"))
        forms.append(LinearForm(-i, (1,), label=f"x-{i} (removes {i})"))
    unique = list(dict.fromkeys(forms))
    logger.debug(
        "p-adic family for p=%d: depth %d, cutoff %d, %d forms.",
        p,
        depth,
        cutoff,
        len(unique),
    )
    return unique


def derivative_family(support, dim, regime, spread=0):
    """Return a finite list of forms that decides singularity.

    A point ``b`` of ``T(f)`` is singular if and only if it is a tropical
    root of ``euler_derivative(f, L, regime)`` for every ``L`` in the list.
    The trivial form ``1`` always comes first.

    Parameters
    ----------
    support : iterable of tuple
        The exponent vectors of the polynomial.
    dim : int
        The number of variables.
    regime : :class:`~.ValuationRegime`
        The valuation regime.
    spread : rational
        For the p-adic regime only: the difference between the largest and
        the smallest term value at the point under test. Larger spreads need
        deeper forms. (Default value = 0)

    Returns
    -------
    list of :class:`LinearForm`
        The forms, each carrying a ``label``.

    Raises
    ------
    :class:`~.UnsupportedRegimeError`
        For the p-adic regime in more than one variable.

    """
    support = tuple(sorted(tuple(exp) for exp in support))
    if not support:
        raise ValueError("The support must not be empty.")
    if regime.kind == RegimeKind.char_p:
        forms = _char_p_family(dim, regime.p)
    elif regime.kind == RegimeKind.char_zero:
        forms = _char_zero_family(support, dim)
    elif dim == 1:
        forms = _padic_family(support, regime.p, spread)
    else:
        raise UnsupportedRegimeError(
            f"p-adic derivative families are only available in one variable, got dim={dim}."
        )
    logger.debug("Derivative family under %s has %d forms.", regime, len(forms))
    return forms
